"""Star products, the family F and almost 2-factors.

F is generated from K3,3 and the Heawood graph H0 by repeated star products
with K3,3 or H0. Both bases are vertex-transitive, so the product only ever
deletes vertex 0 of the base; every vertex of the growing graph and every
pairing of the neighbor triples is tried."""

from __future__ import annotations

import dataclasses
import functools
import itertools
import time
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from . import (
    canonical,
    corpora,
    generators,
    graph6,
    graphs,
    matchings,
    named,
    reports,
    separation,
    util,
)

K33 = "K33"
H0 = "H0"
BASES = [K33, H0]
MAX_N = 30

Pairing = Tuple[int, int, int]
PAIRINGS: List[Pairing] = list(itertools.permutations(range(3)))


class Error(Exception):
    """Module-specific exception."""

    pass


class InvariantError(Error):
    """A structural fact of the star-product construction failed."""

    pass


@functools.cache
def base_graph(name: str) -> graphs.Graph:
    if name == K33:
        return named.k33()
    if name == H0:
        return named.heawood()
    raise Error(f"Unknown base: {name}")


@dataclasses.dataclass(frozen=True)
class StarProductSpec:
    """(g1, u) * (g2, v).

    The i-th neighbor of u, in increasing order, is joined to neighbor
    pairing[i] of v.

    Args:
        g1 (graphs.Graph).
        u (int).
        g2 (graphs.Graph).
        v (int).
        pairing (Pairing): a permutation of 0, 1, 2.
    """

    g1: graphs.Graph
    u: int
    g2: graphs.Graph
    v: int
    pairing: Pairing = (0, 1, 2)

    def __post_init__(self) -> None:
        if not graphs.classify_degrees(self.g1).is_cubic:
            raise Error("First factor is not cubic")
        if not graphs.classify_degrees(self.g2).is_cubic:
            raise Error("Second factor is not cubic")
        if not 0 <= self.u < self.g1.n:
            raise Error(f"Vertex {self.u} is not in the first factor")
        if not 0 <= self.v < self.g2.n:
            raise Error(f"Vertex {self.v} is not in the second factor")
        if sorted(self.pairing) != [0, 1, 2]:
            raise Error(f"Pairing {self.pairing} is not a bijection")

    def swapped(self) -> StarProductSpec:
        inverse = [0, 0, 0]
        for i, j in enumerate(self.pairing):
            inverse[j] = i
        return StarProductSpec(
            self.g2, self.v, self.g1, self.u, tuple(inverse)
        )


@dataclasses.dataclass(frozen=True)
class _Product:
    graph: graphs.Graph
    # Factor vertex -> product vertex, for each factor.
    first: Dict[int, int]
    second: Dict[int, int]
    # Pairing edges, in the order of u's neighbors.
    cut: Tuple[graphs.Edge, ...]


def _build(spec: StarProductSpec) -> _Product:
    first = {
        x: i for i, x in enumerate(x for x in range(spec.g1.n) if x != spec.u)
    }
    offset = spec.g1.n - 1
    second = {
        y: offset + i
        for i, y in enumerate(y for y in range(spec.g2.n) if y != spec.v)
    }
    edges = [
        (first[a], first[b])
        for a, b in spec.g1.edge_list
        if spec.u not in (a, b)
    ]
    edges.extend(
        (second[a], second[b])
        for a, b in spec.g2.edge_list
        if spec.v not in (a, b)
    )
    left = spec.g1.adjacency[spec.u]
    right = spec.g2.adjacency[spec.v]
    cut = tuple(
        graphs.normalize_edge(first[left[i]], second[right[spec.pairing[i]]])
        for i in range(3)
    )
    try:
        graph = graphs.Graph(spec.g1.n + spec.g2.n - 2, edges + list(cut))
    except graphs.Error as error:
        raise Error(f"Star product is not simple: {error}")
    return _Product(graph, first, second, cut)


def star_product(spec: StarProductSpec) -> graphs.Graph:
    """Deletes u and v and joins their neighbor triples by a matching.

    Vertices of g1 - u come first, in order, then those of g2 - v.

    Args:
        spec (StarProductSpec).

    Raises:
        Error: if the product would not be simple.

    Returns:
        graphs.Graph.
    """
    return _build(spec).graph


@dataclasses.dataclass(frozen=True)
class FamilyStep:
    """One star product (current, u) * (base, v) with the given pairing."""

    base: str
    u: int
    v: int
    pairing: Pairing

    def to_json(self) -> Dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class FamilyFMember:
    graph: graphs.Graph
    base: str
    trace: Tuple[FamilyStep, ...] = ()

    @property
    def is_k33_chain(self) -> bool:
        return self.base == K33 and all(
            step.base == K33 for step in self.trace
        )

    def replay(self) -> graphs.Graph:
        """Rebuilds the graph from its base along the trace."""
        graph = base_graph(self.base)
        for step in self.trace:
            graph = star_product(
                StarProductSpec(
                    graph, step.u, base_graph(step.base), step.v, step.pairing
                )
            )
        return graph

    def to_json(self) -> Dict:
        return {
            "graph6": graph6.emit_graph6(self.graph),
            "n": self.graph.n,
            "base": self.base,
            "trace": [step.to_json() for step in self.trace],
        }


@dataclasses.dataclass(frozen=True)
class ExceptionalF:
    index: int
    graph: graphs.Graph

    def to_json(self) -> Dict:
        return {
            "type": "exceptional",
            "index": self.index,
            "graph6": graph6.emit_graph6(self.graph),
        }


def exceptional_f() -> Tuple[ExceptionalF, ...]:
    return tuple(
        ExceptionalF(index, graph)
        for index, graph in enumerate(named.exceptional_f())
    )


@functools.cache
def _exceptional_forms() -> Dict[bytes, int]:
    return {
        canonical.canonical_form(graph): index
        for index, graph in enumerate(named.exceptional_f())
    }


def recognize_exceptional_f(graph: graphs.Graph) -> Optional[int]:
    return _exceptional_forms().get(canonical.canonical_form(graph))


@functools.lru_cache(maxsize=None)
def generate_family_f(max_n: int) -> Tuple[FamilyFMember, ...]:
    """Generates F up to max_n vertices by breadth-first closure.

    Args:
        max_n (int): at most MAX_N.

    Raises:
        Error: above the bound.

    Returns:
        Tuple[FamilyFMember, ...]: one member per isomorphism class, ordered
            by order and then canonical form; the graph of each member is
            the replay of its trace.
    """
    if max_n > MAX_N:
        raise Error(f"Family generation stops at n={MAX_N}")
    found: Dict[bytes, FamilyFMember] = {}
    queue: List[FamilyFMember] = []
    for name in BASES:
        graph = base_graph(name)
        if graph.n <= max_n:
            member = FamilyFMember(graph, name)
            found[canonical.canonical_form(graph)] = member
            queue.append(member)
    while queue:
        member = queue.pop(0)
        for name in BASES:
            base = base_graph(name)
            if member.graph.n + base.n - 2 > max_n:
                continue
            for u in range(member.graph.n):
                for pairing in PAIRINGS:
                    product = star_product(
                        StarProductSpec(member.graph, u, base, 0, pairing)
                    )
                    form = canonical.canonical_form(product)
                    if form in found:
                        continue
                    child = FamilyFMember(
                        product,
                        member.base,
                        member.trace + (FamilyStep(name, u, 0, pairing),),
                    )
                    found[form] = child
                    queue.append(child)
    util.log_info(f"Family F up to n={max_n}: {len(found)} members")
    return tuple(
        found[form]
        for form in sorted(found, key=lambda form: (found[form].graph.n, form))
    )


def star_product_classes(
    graph: graphs.Graph, base: graphs.Graph, all_v: bool = False
) -> Tuple[bytes, ...]:
    """Isomorphism classes of (graph, u) * (base, v) over all u and pairings.

    Args:
        graph (graphs.Graph).
        base (graphs.Graph).
        all_v (bool): whether to vary v as well; otherwise v = 0.

    Returns:
        Tuple[bytes, ...]: sorted canonical forms.
    """
    forms = set()
    for u in range(graph.n):
        for v in range(base.n) if all_v else (0,):
            for pairing in PAIRINGS:
                forms.add(
                    canonical.canonical_form(
                        star_product(
                            StarProductSpec(graph, u, base, v, pairing)
                        )
                    )
                )
    return tuple(sorted(forms))


def is_in_family_f(graph: graphs.Graph) -> Optional[FamilyFMember]:
    """Decides membership in F by generation and look-up.

    Args:
        graph (graphs.Graph): connected and bicubic, at most MAX_N vertices.

    Raises:
        Error: if the graph is not bicubic or too large.

    Returns:
        Optional[FamilyFMember]: the generated member isomorphic to graph.
    """
    if not graphs.classify_degrees(graph).is_bicubic:
        raise Error("Graph is not bicubic")
    if graph.n > MAX_N:
        raise Error(f"Membership is decided up to n={MAX_N}")
    # Members have order 6 + 4k or 14 + 4k.
    if graph.n % 4 != 2:
        return None
    form = canonical.canonical_form(graph)
    for member in generate_family_f(graph.n):
        if member.graph.n == graph.n:
            if canonical.canonical_form(member.graph) == form:
                return member
    return None


def _solver_certificate(
    graph: graphs.Graph,
) -> Optional[matchings.SpanningSubgraphCertificate]:
    """An almost 2-factor from a separating matching of size n/2 - 1."""
    value, certificate = separation.mms_exact(graph)
    if value != graph.n // 2 - 1:
        return None
    return matchings.SpanningSubgraphCertificate(
        graph.n, graph.edges - certificate.matching.edges
    )


@functools.cache
def _h0_certificate() -> matchings.SpanningSubgraphCertificate:
    certificate = _solver_certificate(named.heawood())
    if certificate is None:
        raise InvariantError("H0 has no separating matching of size 6")
    return certificate


def _extend(
    spec: StarProductSpec, factor: FrozenSet[graphs.Edge]
) -> Tuple[_Product, FrozenSet[graphs.Edge]]:
    """Carries an almost 2-factor of g1 over to the product.

    Colors the product properly with three colors; the pairing edges then
    carry one color each. The edges of g2 - v in the colors of the pairing
    edges that replace u's factor edges form a Hamilton path of g2 - v,
    which reroutes the factor through the g2 side. If u has degree 3 in the
    factor, all three pairing edges are used and the end of the third takes
    over the degree-3 role.

    Args:
        spec (StarProductSpec): g2 must be bicubic and 2-factor Hamiltonian.
        factor (FrozenSet[graphs.Edge]): an almost 2-factor of g1.

    Raises:
        InvariantError: if the pairing edges are not colored distinctly or
            the result is not an almost 2-factor.

    Returns:
        Tuple[_Product, FrozenSet[graphs.Edge]].
    """
    product = _build(spec)
    coloring = matchings.proper_3_edge_coloring(product.graph)
    colors = [coloring.color_of[edge] for edge in product.cut]
    if len(set(colors)) != 3:
        raise InvariantError(
            f"Pairing edges {product.cut} are not colored distinctly"
        )
    left = spec.g1.adjacency[spec.u]
    used = [
        i
        for i in range(3)
        if graphs.normalize_edge(spec.u, left[i]) in factor
    ]
    if len(used) == 3:
        keep = {colors[0], colors[1]}
        crossing = list(product.cut)
    else:
        keep = {colors[i] for i in used}
        crossing = [product.cut[i] for i in used]
    second_side = set(product.second.values())
    rerouted = {
        edge
        for edge, color in coloring.color_of.items()
        if color in keep and edge[0] in second_side and edge[1] in second_side
    }
    carried = {
        graphs.normalize_edge(product.first[a], product.first[b])
        for a, b in factor
        if spec.u not in (a, b)
    }
    result = frozenset(carried | rerouted | set(crossing))
    certificate = matchings.SpanningSubgraphCertificate(
        product.graph.n, result
    )
    valid, reason = matchings.validate_almost_two_factor(
        product.graph, certificate
    )
    if not valid:
        raise InvariantError(f"Extended factor is invalid: {reason}")
    return product, result


def _extend_from_base(
    spec: StarProductSpec, factor: FrozenSet[graphs.Edge]
) -> FrozenSet[graphs.Edge]:
    """Extends an almost 2-factor of g2 instead, in spec's numbering."""
    swapped = _extend(spec.swapped(), factor)
    product, result = swapped
    original = _build(spec)
    translate: Dict[int, int] = {}
    for x, position in product.first.items():
        translate[position] = original.second[x]
    for y, position in product.second.items():
        translate[position] = original.first[y]
    return frozenset(
        graphs.normalize_edge(translate[a], translate[b]) for a, b in result
    )


def almost_two_factor(
    member: FamilyFMember,
) -> Union[matchings.SpanningSubgraphCertificate, ExceptionalF]:
    """Builds an almost 2-factor by following the member's trace.

    A factor of the current graph is carried across each product. When the
    current graph has none and the step multiplies by H0, the factor of H0 is
    carried instead. While neither has one (chains of K3,3), the solver looks
    for a separating matching of size n/2 - 1.

    Args:
        member (FamilyFMember).

    Raises:
        InvariantError: if a construction step fails, or a member without a
            factor is not one of the four exceptional graphs.

    Returns:
        Union[matchings.SpanningSubgraphCertificate, ExceptionalF]: the
            factor, or the exceptional graph the member is isomorphic to.
    """
    graph = base_graph(member.base)
    factor: Optional[FrozenSet[graphs.Edge]] = None
    if member.base == H0:
        factor = _h0_certificate().edges
    for step in member.trace:
        spec = StarProductSpec(
            graph, step.u, base_graph(step.base), step.v, step.pairing
        )
        if factor is not None:
            _, factor = _extend(spec, factor)
        elif step.base == H0:
            factor = _extend_from_base(spec, _h0_certificate().edges)
        graph = star_product(spec)
        if factor is None:
            certificate = _solver_certificate(graph)
            if certificate is not None:
                factor = certificate.edges
    if factor is None:
        certificate = _solver_certificate(graph)
        if certificate is not None:
            factor = certificate.edges
    if factor is None:
        index = recognize_exceptional_f(graph)
        if index is None:
            raise InvariantError(
                f"{graph6.emit_graph6(graph)} has no almost 2-factor"
            )
        return ExceptionalF(index, graph)
    certificate = matchings.SpanningSubgraphCertificate(graph.n, factor)
    valid, reason = matchings.validate_almost_two_factor(graph, certificate)
    if not valid:
        raise InvariantError(f"Almost 2-factor is invalid: {reason}")
    return certificate


# Bounds on mms for the four exceptional graphs.
EXCEPTIONAL_BOUNDS = {0: (0, 0), 1: (3, 3), 2: (0, 5), 3: (0, 7)}


def exceptional_f_values() -> Dict[str, int]:
    """Computes mms of the four exceptional graphs.

    Raises:
        InvariantError: if a value breaks its known bound.

    Returns:
        Dict[str, int]: keyed "F0" to "F3".
    """
    values = {}
    for index, graph in enumerate(named.exceptional_f()):
        value, _ = separation.mms_exact(graph)
        low, high = EXCEPTIONAL_BOUNDS[index]
        if not low <= value <= high:
            raise InvariantError(
                f"mms(F{index}) = {value}, outside [{low}, {high}]"
            )
        values[f"F{index}"] = value
    return values


def gorsky_check(spec: StarProductSpec) -> bool:
    """Checks that the product is 2-factor Hamiltonian iff both factors are.

    Args:
        spec (StarProductSpec): both factors bicubic.

    Raises:
        Error: if a factor is not bicubic.

    Returns:
        bool: whether the equivalence holds for this product.
    """
    for factor in (spec.g1, spec.g2):
        if not graphs.classify_degrees(factor).is_bicubic:
            raise Error("Factors must be bicubic")
    product = star_product(spec)
    both, _ = matchings.is_two_factor_hamiltonian(spec.g1)
    if both:
        both, _ = matchings.is_two_factor_hamiltonian(spec.g2)
    combined, _ = matchings.is_two_factor_hamiltonian(product)
    return combined == both


def funk_check(graph: graphs.Graph) -> reports.CheckItem:
    """Compares 2-factor Hamiltonicity with membership in F for one graph.

    Args:
        graph (graphs.Graph): connected and bicubic.

    Returns:
        reports.CheckItem: failing iff the two predicates disagree.
    """
    hamiltonian, _ = matchings.is_two_factor_hamiltonian(graph)
    member = is_in_family_f(graph) is not None
    return reports.CheckItem.single(
        graph,
        ok=hamiltonian == member,
        expected=f"two_factor_hamiltonian={member}",
        got=f"two_factor_hamiltonian={hamiltonian}",
        count=f"in_family_f={member}",
        record={
            "graph6": graph6.emit_graph6(graph),
            "n": graph.n,
            "two_factor_hamiltonian": hamiltonian,
            "in_family_f": member,
        },
    )


def funk_scan(max_n: int) -> reports.VerificationReport:
    """Classifies every connected bicubic graph up to max_n.

    A graph where 2-factor Hamiltonicity and membership in F disagree is a
    counterexample and is listed as a failure.

    Args:
        max_n (int): at most corpora.MAX_CUBIC_N.

    Returns:
        reports.VerificationReport.
    """
    start = time.perf_counter()
    item = sum(
        (
            funk_check(graph)
            for n in corpora.scan_sizes(corpora.BICUBIC, max_n)
            for graph in generators.enumerate_graphs(
                corpora.EnumerationSpec(n, corpora.BICUBIC)
            )
        ),
        reports.CheckItem(),
    )
    return reports.VerificationReport.from_item(
        "conj-funk",
        {"graph_class": corpora.BICUBIC, "max_n": max_n},
        item,
        start,
    )
