"""Which subcubic graphs and cubic multigraphs have a matching cut."""

import functools
from typing import Iterator

from .. import (
    canonical,
    corpora,
    generators,
    graphs,
    named,
    reports,
    separation,
)
from . import base


class SubcubicTheorem(base.BaseTheorem):
    """Connected subcubic graphs are decomposable except for eight.

    The single vertex has no edges and is left out.
    """

    theorem_id = "thm1"
    graph_class = corpora.SUBCUBIC
    min_n = 2
    default_max_n = corpora.MAX_SUBCUBIC_N
    max_max_n = corpora.MAX_SUBCUBIC_N

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        decomposable, _ = separation.is_decomposable(graph)
        index = separation.recognize_exceptional_subcubic(graph)
        return reports.CheckItem.single(
            graph,
            ok=decomposable == (index is None),
            expected=f"decomposable={index is None}",
            got=f"decomposable={decomposable}",
            count="decomposable" if decomposable else f"exceptional_{index}",
        )


@functools.cache
def _nondecomposable_cubic() -> frozenset:
    return frozenset(
        canonical.canonical_form(graph) for graph in (named.k4(), named.k33())
    )


class CubicTheorem(base.BaseTheorem):
    """Connected cubic graphs are decomposable except K4 and K3,3."""

    theorem_id = "thm-moshi"

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        decomposable, certificate = separation.is_decomposable(graph)
        if certificate is not None:
            certificate.validate(graph)
        expected = canonical.canonical_form(graph) not in (
            _nondecomposable_cubic()
        )
        return reports.CheckItem.single(
            graph,
            ok=decomposable == expected,
            expected=f"decomposable={expected}",
            got=f"decomposable={decomposable}",
            count="decomposable" if decomposable else "nondecomposable",
        )


def _is_exceptional(multigraph: graphs.Multigraph) -> bool:
    if multigraph.n == 2:
        return True
    if not multigraph.is_simple:
        return False
    return (
        canonical.canonical_form(multigraph.to_graph())
        in _nondecomposable_cubic()
    )


class MultigraphTheorem(base.BaseTheorem):
    """2-edge-connected cubic multigraphs have a matching cut except three.

    The exceptions are the theta multigraph, K4 and K3,3. The decision is
    compared against a scan over vertex subsets.
    """

    theorem_id = "thm-multi"
    graph_class = "cubic_multigraph"
    default_max_n = 10
    max_max_n = generators.MAX_MULTIGRAPH_N

    def corpus(self, max_n: int) -> Iterator[graphs.Multigraph]:
        self.validate_max_n(max_n)
        for level in generators.cubic_multigraphs(
            max_n, prune=False
        ).values():
            yield from level

    def check(self, multigraph: graphs.Multigraph) -> reports.CheckItem:
        decomposable, witness = (
            separation.mms_multigraph_decomposable(multigraph)
        )
        oracle = separation.multigraph_matching_cut_oracle(multigraph)
        expected = not _is_exceptional(multigraph)
        ok = decomposable == expected == (oracle is not None)
        return reports.CheckItem.single(
            multigraph,
            ok=ok,
            expected=f"decomposable={expected}",
            got=f"decomposable={decomposable}, oracle={oracle is not None}",
            count="decomposable" if decomposable else "nondecomposable",
        )
