"""Matchings, perfect matchings, edge colorings and 2-factors."""

from __future__ import annotations

import collections
import dataclasses
from typing import (
    Any,
    Counter,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Set,
    Tuple,
)

import networkx

from . import graphs


class Error(Exception):
    """Module-specific exception."""

    pass


def _edges_json(edges: Iterable[graphs.Edge]) -> List[List[int]]:
    return [[u, v] for u, v in sorted(edges)]


@dataclasses.dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges.

    Construction only normalizes; host membership is checked by validate.
    """

    edges: FrozenSet[graphs.Edge] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "edges",
            frozenset(graphs.normalize_edge(u, v) for u, v in self.edges),
        )

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[graphs.Edge]:
        return iter(sorted(self.edges))

    def __or__(self, other: Matching) -> Matching:
        return Matching(self.edges | other.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for edge in self.edges for v in edge)

    def validate(self, graph: graphs.Graph) -> None:
        """Checks that this is a matching of the graph.

        Args:
            graph (graphs.Graph).

        Raises:
            Error: naming the offending edge or vertex.
        """
        seen: Set[int] = set()
        for u, v in sorted(self.edges):
            if not graph.has_edge(u, v):
                raise Error(f"Edge {(u, v)} is not in the graph")
            for vertex in (u, v):
                if vertex in seen:
                    raise Error(f"Vertex {vertex} is matched twice")
                seen.add(vertex)

    def is_perfect(self, graph: graphs.Graph) -> bool:
        return len(self.vertices) == graph.n

    def to_json(self) -> Dict[str, Any]:
        return {"type": "matching", "edges": _edges_json(self.edges)}


@dataclasses.dataclass(frozen=True)
class EdgeColoring:
    """An assignment of the classes 1, 2, 3 to the edges of a graph."""

    color_of: Dict[graphs.Edge, int]

    def classes(self) -> Tuple[Matching, ...]:
        buckets: Dict[int, List[graphs.Edge]] = {1: [], 2: [], 3: []}
        for edge, color in self.color_of.items():
            buckets[color].append(edge)
        return tuple(Matching(buckets[color]) for color in (1, 2, 3))

    def validate(self, graph: graphs.Graph) -> None:
        """Checks totality and properness.

        Raises:
            Error.
        """
        if set(self.color_of) != set(graph.edges):
            raise Error("Coloring is not total on the edge set")
        for vertex in range(graph.n):
            colors = [
                self.color_of[edge] for edge in graph.incident_edges(vertex)
            ]
            if len(set(colors)) != len(colors):
                raise Error(f"Two edges at vertex {vertex} share a color")
            if not set(colors) <= {1, 2, 3}:
                raise Error(f"Invalid color at vertex {vertex}")

    def to_json(self) -> Dict[str, Any]:
        return {
            "type": "coloring",
            "edges": _edges_json(self.color_of),
            "colors": [self.color_of[edge] for edge in sorted(self.color_of)],
        }


@dataclasses.dataclass(frozen=True)
class SpanningSubgraphCertificate:
    """An edge subset of a host graph, kept with the host's order."""

    n: int
    edges: FrozenSet[graphs.Edge]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "edges",
            frozenset(graphs.normalize_edge(u, v) for u, v in self.edges),
        )

    @property
    def degrees(self) -> List[int]:
        degrees = [0] * self.n
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return degrees

    @property
    def degree_census(self) -> Counter[int]:
        return collections.Counter(self.degrees)

    @property
    def component_count(self) -> int:
        return graphs.count_components(self.n, self.edges)

    def complement(self, graph: graphs.Graph) -> Matching:
        """Returns the host edges outside the certificate.

        Raises:
            Error: if the complement is not a matching.
        """
        matching = Matching(graph.edges - self.edges)
        matching.validate(graph)
        return matching

    def to_json(self) -> Dict[str, Any]:
        return {
            "type": "spanning",
            "edges": _edges_json(self.edges),
            "degree_census": {
                str(degree): count
                for degree, count in sorted(self.degree_census.items())
            },
        }


def maximum_matching(graph: graphs.Graph) -> Matching:
    """Computes a maximum-cardinality matching with Edmonds' blossoms.

    Args:
        graph (graphs.Graph).

    Returns:
        Matching.
    """
    return _maximum_matching(graph.to_networkx())


def _maximum_matching(graph: networkx.Graph) -> Matching:
    return Matching(networkx.max_weight_matching(graph, maxcardinality=True))


def maximum_matching_avoiding(
    graph: graphs.Graph, excluded: Iterable[int]
) -> Matching:
    """Computes a maximum matching of the graph minus some vertices.

    Args:
        graph (graphs.Graph).
        excluded (Iterable[int]): vertices to delete first.

    Returns:
        Matching.
    """
    excluded = set(excluded)
    remainder = networkx.Graph()
    remainder.add_edges_from(
        (u, v)
        for u, v in graph.edge_list
        if u not in excluded and v not in excluded
    )
    return _maximum_matching(remainder)


def enumerate_matchings(graph: graphs.Graph) -> Iterator[Matching]:
    """Yields every matching exactly once, the empty one first.

    Edges are explored in index order, so the stream is deterministic.

    Args:
        graph (graphs.Graph).

    Yields:
        Matching.
    """
    edges = graph.edge_list
    chosen: List[graphs.Edge] = []
    used: Set[int] = set()

    def extend(start: int) -> Iterator[Matching]:
        yield Matching(chosen)
        for index in range(start, len(edges)):
            u, v = edges[index]
            if u in used or v in used:
                continue
            chosen.append((u, v))
            used.update((u, v))
            yield from extend(index + 1)
            used.difference_update((u, v))
            chosen.pop()

    yield from extend(0)


def enumerate_perfect_matchings(graph: graphs.Graph) -> Iterator[Matching]:
    """Yields every perfect matching exactly once.

    The smallest unmatched vertex is always matched next, to its neighbors
    in increasing order.

    Args:
        graph (graphs.Graph): of even order.

    Raises:
        Error: on odd order.

    Yields:
        Matching.
    """
    if graph.n % 2:
        raise Error(f"Odd order {graph.n} has no perfect matching")
    matched = [False] * graph.n
    chosen: List[graphs.Edge] = []

    def extend(start: int) -> Iterator[Matching]:
        vertex = start
        while vertex < graph.n and matched[vertex]:
            vertex += 1
        if vertex == graph.n:
            yield Matching(chosen)
            return
        matched[vertex] = True
        for neighbor in graph.adjacency[vertex]:
            if matched[neighbor]:
                continue
            matched[neighbor] = True
            chosen.append((vertex, neighbor))
            yield from extend(vertex + 1)
            chosen.pop()
            matched[neighbor] = False
        matched[vertex] = False

    yield from extend(0)


def _require_cubic(graph: graphs.Graph) -> None:
    if not graphs.classify_degrees(graph).is_cubic:
        raise Error("Graph is not cubic")


def proper_3_edge_coloring(graph: graphs.Graph) -> EdgeColoring:
    """Colors a bicubic graph with three perfect matchings.

    Class 1 is a maximum (hence perfect) matching; what remains is a
    disjoint union of even cycles, colored 2 and 3 alternately.

    Args:
        graph (graphs.Graph): bicubic.

    Raises:
        Error: if the graph is not bicubic.

    Returns:
        EdgeColoring.
    """
    if not graphs.classify_degrees(graph).is_bicubic:
        raise Error("Graph is not bicubic")
    first = maximum_matching(graph)
    color_of = {edge: 1 for edge in first.edges}
    rest = graph.delete_edges(first.edges)
    visited = [False] * graph.n
    for start in range(graph.n):
        if visited[start]:
            continue
        previous, current, color = None, start, 2
        while True:
            visited[current] = True
            following = next(
                w for w in rest.adjacency[current] if w != previous
            )
            color_of[graphs.normalize_edge(current, following)] = color
            color = 5 - color
            previous, current = current, following
            if current == start:
                break
    coloring = EdgeColoring(color_of)
    coloring.validate(graph)
    return coloring


def two_factor_components(
    graph: graphs.Graph, matching: Matching
) -> List[List[int]]:
    """Returns the components of the graph minus a matching.

    When the graph is cubic and the matching perfect, these are the cycles
    of the complementary 2-factor.
    """
    return graphs.connected_components(graph.delete_edges(matching.edges))


def is_two_factor_hamiltonian(
    graph: graphs.Graph,
) -> Tuple[bool, Optional[SpanningSubgraphCertificate]]:
    """Decides whether every 2-factor is a Hamilton cycle.

    Stops at the first perfect matching whose complement is disconnected.

    Args:
        graph (graphs.Graph): connected and cubic.

    Raises:
        Error: if the graph is not cubic.

    Returns:
        Tuple[bool, Optional[SpanningSubgraphCertificate]]: the verdict and,
            when false, the disconnected 2-factor.
    """
    _require_cubic(graph)
    for matching in enumerate_perfect_matchings(graph):
        rest = graph.edges - matching.edges
        if graphs.count_components(graph.n, rest) > 1:
            return False, SpanningSubgraphCertificate(graph.n, rest)
    return True, None


def validate_almost_two_factor(
    graph: graphs.Graph, certificate: SpanningSubgraphCertificate
) -> Tuple[bool, str]:
    """Checks an almost 2-factor.

    That is a disconnected spanning subgraph with exactly two vertices of
    degree 3 and all others of degree 2.

    Args:
        graph (graphs.Graph).
        certificate (SpanningSubgraphCertificate).

    Returns:
        Tuple[bool, str]: the verdict and, when false, the reason.
    """
    if certificate.n != graph.n:
        return False, "certificate does not span the graph"
    if not certificate.edges <= graph.edges:
        return False, "certificate has edges outside the graph"
    census = certificate.degree_census
    if census[3] != 2:
        return False, f"{census[3]} vertices of degree 3, expected 2"
    if census[2] != graph.n - 2:
        return False, "some vertex has degree other than 2 or 3"
    if certificate.component_count < 2:
        return False, "certificate is connected"
    return True, ""
