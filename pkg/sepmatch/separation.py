"""Separating matchings, matching cuts and the exact solver.

A matching is separating iff it contains a matching cut, and the component
of any fixed vertex in the graph minus a separating matching is bounded by a
matching cut inside that matching. So every maximization here runs over the
cuts delta(S) with S connected and containing vertex 0, which are in
bijection with those components."""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import (
    Any,
    Collection,
    Dict,
    FrozenSet,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from . import canonical, graphs, matchings, named

MAX_N = 24
MAX_ORACLE_EDGES = 24

_IN, _OUT, _UNDECIDED = 1, 0, -1


class Error(Exception):
    """Module-specific exception."""

    pass


@dataclasses.dataclass(frozen=True)
class MatchingCut:
    """A vertex side S and the matching delta(S)."""

    side: FrozenSet[int]
    cut: FrozenSet[graphs.Edge]

    @property
    def matching(self) -> matchings.Matching:
        return matchings.Matching(self.cut)


@dataclasses.dataclass(frozen=True)
class SeparationCertificate:
    """A separating matching with a side whose boundary it contains."""

    matching: matchings.Matching
    witness_side: FrozenSet[int]

    @property
    def size(self) -> int:
        return self.matching.size

    def validate(self, graph: graphs.Graph) -> None:
        """Checks the certificate against its host.

        Raises:
            Error.
        """
        try:
            self.matching.validate(graph)
        except matchings.Error as error:
            raise Error(f"Invalid certificate matching: {error}")
        if not self.witness_side or len(self.witness_side) >= graph.n:
            raise Error("Witness side must be nonempty and proper")
        if not graph.boundary(self.witness_side) <= self.matching.edges:
            raise Error("Boundary of the witness side is not in the matching")

    def to_json(self) -> Dict[str, Any]:
        document = self.matching.to_json()
        document["witness_side"] = sorted(self.witness_side)
        return document


def _require_connected(graph: graphs.Graph, bound: int = MAX_N) -> None:
    if graph.n > bound:
        raise Error(f"Graph has {graph.n} vertices; the bound is {bound}")
    if graph.n == 0 or not graph.is_connected:
        raise Error("Graph is not connected")


def is_separating(graph: graphs.Graph, matching: matchings.Matching) -> bool:
    """Decides whether removing the matching adds components.

    Args:
        graph (graphs.Graph).
        matching (matchings.Matching).

    Raises:
        Error: if it is not a matching of the graph.

    Returns:
        bool.
    """
    try:
        matching.validate(graph)
    except matchings.Error as error:
        raise Error(str(error))
    if not matching.edges:
        return False
    rest = graph.edges - matching.edges
    return graphs.count_components(graph.n, rest) > graph.component_count


def _propagate(graph: graphs.Graph, state: List[int]) -> Optional[List[int]]:
    """Forces the choices implied by the matching condition.

    A vertex may have at most one neighbor on the other side; once it has
    one, all of its undecided neighbors join its own side.

    Returns:
        Optional[List[int]]: the updated state, or None on a contradiction.
    """
    changed = True
    while changed:
        changed = False
        for vertex in range(graph.n):
            side = state[vertex]
            if side == _UNDECIDED:
                continue
            across = sum(
                1
                for w in graph.adjacency[vertex]
                if state[w] not in (side, _UNDECIDED)
            )
            if across > 1:
                return None
            if across == 1:
                for w in graph.adjacency[vertex]:
                    if state[w] == _UNDECIDED:
                        state[w] = side
                        changed = True
    return state


def enumerate_matching_cuts(graph: graphs.Graph) -> Iterator[MatchingCut]:
    """Yields every matching cut once, with its canonical side.

    The canonical side is the component containing vertex 0 once the cut is
    removed. Sides are grown from vertex 0 one boundary vertex at a time,
    pruning as soon as some vertex has two neighbors across.

    Args:
        graph (graphs.Graph): connected, at most MAX_N vertices.

    Raises:
        Error: on disconnected or oversized input.

    Yields:
        MatchingCut.
    """
    _require_connected(graph)

    def search(state: List[int]) -> Iterator[MatchingCut]:
        state = _propagate(graph, state)
        if state is None:
            return
        frontier = min(
            (
                w
                for v in range(graph.n)
                if state[v] == _IN
                for w in graph.adjacency[v]
                if state[w] == _UNDECIDED
            ),
            default=None,
        )
        if frontier is None:
            side = frozenset(v for v in range(graph.n) if state[v] == _IN)
            if len(side) < graph.n:
                yield MatchingCut(side, graph.boundary(side))
            return
        for choice in (_IN, _OUT):
            child = list(state)
            child[frontier] = choice
            yield from search(child)

    initial = [_UNDECIDED] * graph.n
    initial[0] = _IN
    yield from search(initial)


def is_decomposable(
    graph: graphs.Graph,
) -> Tuple[bool, Optional[SeparationCertificate]]:
    """Decides whether the graph has a matching cut.

    Args:
        graph (graphs.Graph): connected.

    Raises:
        Error: on disconnected or oversized input.

    Returns:
        Tuple[bool, Optional[SeparationCertificate]].
    """
    for cut in enumerate_matching_cuts(graph):
        return True, SeparationCertificate(cut.matching, cut.side)
    return False, None


def mms_exact(
    graph: graphs.Graph,
) -> Tuple[int, Optional[SeparationCertificate]]:
    """Computes the maximum size of a separating matching.

    This is the maximum over matching cuts C of |C| plus the matching number
    of the graph minus the endpoints of C. Among optimal cuts the one with
    the lexicographically least side is certified.

    Args:
        graph (graphs.Graph): connected, at most MAX_N vertices.

    Raises:
        Error: on disconnected or oversized input.

    Returns:
        Tuple[int, Optional[SeparationCertificate]]: the value, and a
            certificate unless the value is 0.
    """
    cuts = sorted(
        enumerate_matching_cuts(graph), key=lambda cut: sorted(cut.side)
    )
    best, certificate = 0, None
    ceiling = graph.n // 2
    for cut in cuts:
        size = len(cut.cut)
        if size + (graph.n - 2 * size) // 2 <= best:
            continue
        rest = matchings.maximum_matching_avoiding(
            graph, cut.matching.vertices
        )
        if size + rest.size > best:
            best = size + rest.size
            certificate = SeparationCertificate(cut.matching | rest, cut.side)
            if best == ceiling:
                break
    if certificate is not None:
        certificate.validate(graph)
    return best, certificate


def mms_oracle(graph: graphs.Graph) -> int:
    """Computes mms by scanning every matching.

    Args:
        graph (graphs.Graph): at most MAX_ORACLE_EDGES edges.

    Raises:
        Error: above the edge bound.

    Returns:
        int.
    """
    if graph.m > MAX_ORACLE_EDGES:
        raise Error(
            f"Graph has {graph.m} edges; the oracle bound is "
            f"{MAX_ORACLE_EDGES}"
        )
    best = 0
    for matching in matchings.enumerate_matchings(graph):
        if matching.size > best and is_separating(graph, matching):
            best = matching.size
    return best


@functools.cache
def _exceptional_forms() -> Dict[bytes, int]:
    return {
        canonical.canonical_form(graph): index
        for index, graph in enumerate(named.exceptional_subcubic())
    }


def recognize_exceptional_subcubic(graph: graphs.Graph) -> Optional[int]:
    """Looks a graph up among the eight nondecomposable subcubic graphs.

    Args:
        graph (graphs.Graph): connected and subcubic.

    Raises:
        Error: if the graph is not subcubic.

    Returns:
        Optional[int]: the index, or None.
    """
    if not graphs.classify_degrees(graph).is_subcubic:
        raise Error("Graph is not subcubic")
    if not 3 <= graph.n <= 7:
        return None
    return _exceptional_forms().get(canonical.canonical_form(graph))


def _require_cubic(graph: graphs.Graph) -> None:
    if not graphs.classify_degrees(graph).is_cubic:
        raise Error("Graph is not cubic")


def _side_of(graph: graphs.Graph, edge: graphs.Edge) -> FrozenSet[int]:
    """The component of the edge's first end once the edge is removed."""
    rest = graph.delete_edges([edge])
    for block in graphs.connected_components(rest):
        if edge[0] in block:
            return frozenset(block)
    raise Error(f"Vertex {edge[0]} not found")


def bridge_separating_matching(
    graph: graphs.Graph, bridge: graphs.Edge
) -> SeparationCertificate:
    """Builds a separating matching through a bridge.

    Starts from a maximum matching; if the bridge is not in it, the matching
    edges at the bridge's ends are traded for the bridge. The result has size
    at least the matching number minus one.

    Args:
        graph (graphs.Graph): connected and cubic.
        bridge (graphs.Edge).

    Raises:
        Error: if the graph is not cubic or the edge is not a bridge.

    Returns:
        SeparationCertificate.
    """
    _require_cubic(graph)
    bridge = graphs.normalize_edge(*bridge)
    if bridge not in graphs.bridges(graph):
        raise Error(f"Edge {bridge} is not a bridge")
    matching = matchings.maximum_matching(graph)
    if bridge not in matching.edges:
        u, v = bridge
        kept = {
            edge
            for edge in matching.edges
            if u not in edge and v not in edge
        }
        matching = matchings.Matching(kept | {bridge})
    certificate = SeparationCertificate(matching, _side_of(graph, bridge))
    certificate.validate(graph)
    return certificate


def bridge_disconnecting_pm(graph: graphs.Graph) -> matchings.Matching:
    """Builds a perfect matching containing a bridge.

    Both sides of a bridge in a cubic graph have odd order, so a perfect
    matching always uses every bridge; the swap below only fires if that
    parity argument were false, and then fails loudly.

    Args:
        graph (graphs.Graph): cubic, with a bridge and a perfect matching.

    Raises:
        Error: without a bridge or a perfect matching, or if the swap does
            not produce a perfect matching.

    Returns:
        matchings.Matching.
    """
    _require_cubic(graph)
    found = sorted(graphs.bridges(graph))
    if not found:
        raise Error("Graph has no bridge")
    matching = matchings.maximum_matching(graph)
    if not matching.is_perfect(graph):
        raise Error("Graph has no perfect matching")
    if matching.edges.isdisjoint(found):
        u, v = found[0]
        kept = {
            edge
            for edge in matching.edges
            if u not in edge and v not in edge
        }
        matching = matchings.Matching(kept | {found[0]})
        if not matching.is_perfect(graph):
            raise Error("Swap through the bridge lost perfection")
    if not is_separating(graph, matching):
        raise Error("Perfect matching through a bridge does not separate")
    return matching


def _is_multigraph_cut(
    multigraph: graphs.Multigraph, indices: Collection[int]
) -> bool:
    """Decides whether the indexed edges form a separating matching."""
    ends = [v for index in indices for v in multigraph.edges[index]]
    if len(set(ends)) != len(ends):
        return False
    indices = set(indices)
    rest = [
        edge
        for index, edge in enumerate(multigraph.edges)
        if index not in indices
    ]
    return (
        graphs.count_components(multigraph.n, rest)
        > multigraph.component_count
    )


def lift_cut_from_contraction(
    graph: graphs.Graph,
    contraction: graphs.ContractionMap,
    cut: Collection[int],
) -> matchings.Matching:
    """Lifts a separating matching of C(G) to G.

    Original edges are kept; a subdivided path contributes its first edge.

    Args:
        graph (graphs.Graph): the graph that was contracted.
        contraction (graphs.ContractionMap).
        cut (Collection[int]): indices of contracted edges.

    Raises:
        Error: if the cut does not separate the contracted multigraph.

    Returns:
        matchings.Matching.
    """
    if not cut or not _is_multigraph_cut(contraction.contracted, cut):
        raise Error("Cut is not a separating matching of the contraction")
    lifted = matchings.Matching(
        contraction.edge_origin[index][:2] for index in sorted(cut)
    )
    if not is_separating(graph, lifted):
        raise Error("Lifted cut does not separate the graph")
    return lifted


def multigraph_matching_cut_oracle(
    multigraph: graphs.Multigraph,
) -> Optional[FrozenSet[int]]:
    """Finds a matching cut of a multigraph by scanning vertex subsets.

    Returns:
        Optional[FrozenSet[int]]: the cut's edge indices, or None.
    """
    others = range(1, multigraph.n)
    for size in range(0, multigraph.n - 1):
        for rest in itertools.combinations(others, size):
            side = {0, *rest}
            crossing = frozenset(
                index
                for index, (u, v) in enumerate(multigraph.edges)
                if (u in side) != (v in side)
            )
            if crossing and _is_multigraph_cut(multigraph, crossing):
                return crossing
    return None


@functools.cache
def _nondecomposable_cubic_forms() -> FrozenSet[bytes]:
    return frozenset(
        canonical.canonical_form(graph)
        for graph in (named.k4(), named.k33())
    )


def mms_multigraph_decomposable(
    multigraph: graphs.Multigraph,
) -> Tuple[bool, Optional[FrozenSet[int]]]:
    """Decides whether a 2-edge-connected cubic multigraph has a matching cut.

    A parallel pair uv yields the cut made of the third edges at u and v;
    without parallel edges the multigraph is a simple cubic graph.

    Args:
        multigraph (graphs.Multigraph): cubic and 2-edge-connected.

    Raises:
        Error: if the multigraph is not cubic or not 2-edge-connected.

    Returns:
        Tuple[bool, Optional[FrozenSet[int]]]: the verdict and a witness cut
            given as edge indices.
    """
    if not multigraph.is_cubic:
        raise Error("Multigraph is not cubic")
    if multigraph.has_loops or not multigraph.is_two_edge_connected:
        raise Error("Multigraph is not 2-edge-connected")
    for (u, v), count in sorted(multigraph.multiplicities.items()):
        if count == 3:
            return False, None
        if count == 2:
            (third_u,) = (
                index
                for index in multigraph.incidence[u]
                if multigraph.edges[index] != (u, v)
            )
            (third_v,) = (
                index
                for index in multigraph.incidence[v]
                if multigraph.edges[index] != (u, v)
            )
            witness = frozenset((third_u, third_v))
            if not _is_multigraph_cut(multigraph, witness):
                raise Error(f"Parallel pair {(u, v)} does not yield a cut")
            return True, witness
    graph = multigraph.to_graph()
    if canonical.canonical_form(graph) in _nondecomposable_cubic_forms():
        return False, None
    found, certificate = is_decomposable(graph)
    if not found:
        return False, None
    index_of = {edge: index for index, edge in enumerate(multigraph.edges)}
    return True, frozenset(
        index_of[edge] for edge in certificate.matching.edges
    )


def subdivided_star_cut(
    graph: graphs.Graph, vertex: int, edges: Sequence[graphs.Edge]
) -> Tuple[graphs.Graph, SeparationCertificate]:
    """Subdivides two edges at a vertex and isolates it with a matching cut.

    With subdivision vertices a and b, the side {vertex, a, b} has a
    boundary made of vertex's remaining edge and the two far halves of the
    subdivided edges.

    Args:
        graph (graphs.Graph): subcubic.
        vertex (int).
        edges (Sequence[graphs.Edge]): two distinct edges at vertex.

    Raises:
        Error: if the edges are not two distinct edges at vertex.

    Returns:
        Tuple[graphs.Graph, SeparationCertificate]: the subdivided graph and
            the cut.
    """
    normalized = {graphs.normalize_edge(*edge) for edge in edges}
    if len(normalized) != 2 or not all(
        vertex in edge and graph.has_edge(*edge) for edge in normalized
    ):
        raise Error(f"Need two distinct edges at vertex {vertex}")
    subdivided = graph.subdivide(sorted(normalized))
    side = frozenset({vertex, graph.n, graph.n + 1})
    cut = matchings.Matching(subdivided.boundary(side))
    certificate = SeparationCertificate(cut, side)
    certificate.validate(subdivided)
    if not is_separating(subdivided, cut):
        raise Error("Subdivided star is not separated")
    return subdivided, certificate
