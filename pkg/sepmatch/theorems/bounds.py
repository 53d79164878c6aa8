"""Lower bounds on mms for connected cubic graphs."""

from typing import Iterator

from .. import graphs, matchings, reports, separation
from . import base


class BridgeTheorem(base.BaseTheorem):
    """With a bridge, mms is at least the matching number minus one.

    The certificate built through the first bridge must reach the bound as
    well.
    """

    theorem_id = "thm3"

    def corpus(self, max_n: int) -> Iterator[graphs.Graph]:
        for graph in super().corpus(max_n):
            if graphs.bridges(graph):
                yield graph

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        value, _ = separation.mms_exact(graph)
        nu = matchings.maximum_matching(graph).size
        bridge = min(graphs.bridges(graph))
        certificate = separation.bridge_separating_matching(graph, bridge)
        return reports.CheckItem.single(
            graph,
            ok=value >= certificate.size >= nu - 1,
            expected=f"mms>={nu - 1}",
            got=f"mms={value}, certificate={certificate.size}",
            count=f"mms=nu-{nu - value}",
        )


class BridgelessTheorem(base.BaseTheorem):
    """Decomposable and 2-edge-connected gives mms at least n/2 - 2."""

    theorem_id = "thm4"

    def corpus(self, max_n: int) -> Iterator[graphs.Graph]:
        for graph in super().corpus(max_n):
            if not graphs.bridges(graph):
                yield graph

    def check(self, graph: graphs.Graph) -> reports.CheckItem:
        value, _ = separation.mms_exact(graph)
        if value == 0:
            return reports.CheckItem.skipped("nondecomposable")
        bound = graph.n // 2 - 2
        return reports.CheckItem.single(
            graph,
            ok=value >= bound,
            expected=f"mms>={bound}",
            got=f"mms={value}",
            count=f"mms=n/2-{graph.n // 2 - value}",
        )
