"""Graph and multigraph carriers and structural queries.

Vertices are always the dense indices 0..n-1 and every certificate refers to
them, so nothing in here ever silently relabels a graph.

Anything that is a graph value is a frozen dataclass; derived data is cached
on first use so that graphs can be shared freely between workers."""

from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
from typing import (
    Counter,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)

import networkx
import numpy
from scipy import sparse
from scipy.sparse import csgraph

Edge = Tuple[int, int]


class Error(Exception):
    """Module-specific exception."""

    pass


def normalize_edge(u: int, v: int) -> Edge:
    """Returns the edge with its endpoints in increasing order."""
    return (u, v) if u <= v else (v, u)


def count_components(n: int, edges: Iterable[Edge]) -> int:
    """Counts connected components of the graph on 0..n-1 with these edges.

    Parallel edges and loops are harmless here.

    Args:
        n (int).
        edges (Iterable[Edge]).

    Returns:
        int.
    """
    return component_labels(n, edges)[0]


def component_labels(
    n: int, edges: Iterable[Edge]
) -> Tuple[int, numpy.ndarray]:
    if n == 0:
        return 0, numpy.zeros(0, dtype=numpy.int32)
    edges = list(edges)
    if edges:
        rows, cols = zip(*edges)
    else:
        rows, cols = (), ()
    matrix = sparse.coo_matrix(
        (numpy.ones(len(rows), dtype=numpy.int8), (rows, cols)),
        shape=(n, n),
    ).tocsr()
    return csgraph.connected_components(matrix, directed=False)


def partition_by_labels(n: int, labels: numpy.ndarray) -> List[List[int]]:
    blocks: Dict[int, List[int]] = {}
    for vertex in range(n):
        blocks.setdefault(int(labels[vertex]), []).append(vertex)
    # Blocks are discovered in vertex order, so they come out sorted by their
    # smallest vertex.
    return list(blocks.values())


@dataclasses.dataclass(frozen=True)
class Graph:
    """A simple undirected graph on the vertices 0..n-1.

    Args:
        n (int): vertex count.
        edges (Iterable[Edge]): unordered vertex pairs; normalized to
            increasing endpoint order on construction.
    """

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise Error(f"Invalid vertex count: {self.n}")
        raw = [normalize_edge(int(u), int(v)) for u, v in self.edges]
        edges = frozenset(raw)
        if len(edges) != len(raw):
            duplicates = [
                edge for edge, count in Counter(raw).items() if count > 1
            ]
            raise Error(f"Duplicate edges: {sorted(duplicates)}")
        for u, v in edges:
            if u == v:
                raise Error(f"Self-loop at vertex {u}")
            if u < 0 or v >= self.n:
                raise Error(f"Edge {(u, v)} out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, [tuple(edge) for edge in edges])

    @functools.cached_property
    def edge_list(self) -> Tuple[Edge, ...]:
        """Edges in lexicographic order; this is the edge index order."""
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edge_list:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(row)) for row in neighbors)

    @functools.cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        return self.adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    @functools.cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def to_networkx(self) -> networkx.Graph:
        graph = networkx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edge_list)
        return graph

    @classmethod
    def from_networkx(cls, graph: networkx.Graph) -> Graph:
        """Converts a networkx graph whose nodes are already 0..n-1."""
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise Error("networkx graph nodes must be 0..n-1")
        return cls(n, list(graph.edges))

    def delete_edges(self, edges: Iterable[Edge]) -> Graph:
        removed = {normalize_edge(u, v) for u, v in edges}
        return Graph(self.n, self.edges - removed)

    def add_edges(self, edges: Iterable[Edge]) -> Graph:
        return Graph(self.n, list(self.edges) + list(edges))

    def relabel(self, permutation: Sequence[int]) -> Graph:
        """Returns the graph with vertex v renamed permutation[v]."""
        if sorted(permutation) != list(range(self.n)):
            raise Error("Relabeling must be a permutation of 0..n-1")
        return Graph(
            self.n,
            [(permutation[u], permutation[v]) for u, v in self.edge_list],
        )

    def subdivide(self, edges: Iterable[Edge]) -> Graph:
        """Subdivides each listed edge once; new vertices are appended."""
        n = self.n
        result = set(self.edges)
        for u, v in edges:
            edge = normalize_edge(u, v)
            if edge not in result:
                raise Error(f"Cannot subdivide non-edge {edge}")
            result.remove(edge)
            result.update({normalize_edge(u, n), normalize_edge(n, v)})
            n += 1
        return Graph(n, result)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(
            self.n + other.n,
            list(self.edges)
            + [(u + shift, v + shift) for u, v in other.edges],
        )

    def incident_edges(self, vertex: int) -> List[Edge]:
        return [normalize_edge(vertex, w) for w in self.adjacency[vertex]]

    def boundary(self, side: Iterable[int]) -> FrozenSet[Edge]:
        """Returns δ(side), the edges with exactly one end in side."""
        side = set(side)
        return frozenset(
            (u, v) for u, v in self.edges if (u in side) != (v in side)
        )

    @functools.cached_property
    def component_count(self) -> int:
        return count_components(self.n, self.edges)

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1


def connected_components(graph: Graph) -> List[List[int]]:
    """Partitions the vertices into connected components.

    Args:
        graph (Graph).

    Returns:
        List[List[int]]: blocks, each sorted, ordered by smallest vertex.
    """
    _, labels = component_labels(graph.n, graph.edges)
    return partition_by_labels(graph.n, labels)


def bridges(graph: Graph) -> FrozenSet[Edge]:
    """Returns the edges whose removal increases the component count.

    Args:
        graph (Graph).

    Returns:
        FrozenSet[Edge].
    """
    return frozenset(
        normalize_edge(u, v) for u, v in networkx.bridges(graph.to_networkx())
    )


@dataclasses.dataclass(frozen=True)
class DegreeProfile:
    """Degree census of a graph.

    The bipartition witness lists the side containing the smallest
    non-isolated vertex first."""

    is_subcubic: bool
    is_cubic: bool
    is_bipartite: bool
    is_bicubic: bool
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    max_degree: int
    min_degree: int


def classify_degrees(graph: Graph) -> DegreeProfile:
    """Computes the degree flags, with a bipartition witness if one exists.

    Args:
        graph (Graph).

    Returns:
        DegreeProfile.
    """
    degrees = graph.degrees
    max_degree = max(degrees, default=0)
    min_degree = min(degrees, default=0)
    try:
        coloring = networkx.bipartite.color(graph.to_networkx())
    except networkx.NetworkXError:
        bipartition = None
    else:
        first = coloring[0] if graph.n else 0
        left = tuple(v for v in range(graph.n) if coloring[v] == first)
        right = tuple(v for v in range(graph.n) if coloring[v] != first)
        bipartition = (left, right)
    is_cubic = graph.n > 0 and min_degree == 3 and max_degree == 3
    return DegreeProfile(
        is_subcubic=max_degree <= 3,
        is_cubic=is_cubic,
        is_bipartite=bipartition is not None,
        is_bicubic=is_cubic and bipartition is not None,
        bipartition=bipartition,
        max_degree=max_degree,
        min_degree=min_degree,
    )


def find_claws(graph: Graph) -> List[Tuple[int, Tuple[int, int, int]]]:
    """Lists every induced K1,3 as (center, leaves).

    Args:
        graph (Graph).

    Returns:
        List[Tuple[int, Tuple[int, int, int]]]: empty iff claw-free.
    """
    claws = []
    for center in range(graph.n):
        for leaves in itertools.combinations(graph.adjacency[center], 3):
            if not any(
                graph.has_edge(a, b)
                for a, b in itertools.combinations(leaves, 2)
            ):
                claws.append((center, leaves))
    return claws


@dataclasses.dataclass(frozen=True)
class Multigraph:
    """An undirected multigraph on 0..n-1; parallel edges and loops allowed.

    Edges keep their given order: an edge is identified by its index, since
    parallel copies are otherwise indistinguishable. A loop contributes two to
    the degree of its vertex.

    Args:
        n (int): vertex count.
        edges (Tuple[Edge, ...]): the edge multiset.
    """

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise Error(f"Invalid vertex count: {self.n}")
        edges = tuple(normalize_edge(int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u < 0 or v >= self.n:
                raise Error(f"Edge {(u, v)} out of range for n={self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_graph(cls, graph: Graph) -> Multigraph:
        return cls(graph.n, graph.edge_list)

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def multiplicities(self) -> Counter[Edge]:
        return collections.Counter(self.edges)

    @functools.cached_property
    def degrees(self) -> Tuple[int, ...]:
        degrees = [0] * self.n
        for u, v in self.edges:
            degrees[u] += 1
            degrees[v] += 1
        return tuple(degrees)

    @functools.cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """For each vertex, the indices of the edges at it.

        A loop index appears twice."""
        incidence: List[List[int]] = [[] for _ in range(self.n)]
        for index, (u, v) in enumerate(self.edges):
            incidence[u].append(index)
            incidence[v].append(index)
        return tuple(tuple(row) for row in incidence)

    @property
    def is_cubic(self) -> bool:
        return self.n > 0 and all(degree == 3 for degree in self.degrees)

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    @property
    def is_simple(self) -> bool:
        return not self.has_loops and all(
            count == 1 for count in self.multiplicities.values()
        )

    @property
    def defect(self) -> int:
        """Number of edges beyond the first in each parallel class."""
        return sum(count - 1 for count in self.multiplicities.values())

    def to_graph(self) -> Graph:
        if not self.is_simple:
            raise Error("Multigraph has loops or parallel edges")
        return Graph(self.n, self.edges)

    def other_end(self, index: int, vertex: int) -> int:
        u, v = self.edges[index]
        return v if u == vertex else u

    @functools.cached_property
    def component_count(self) -> int:
        return count_components(self.n, self.edges)

    def bridge_indices(self) -> List[int]:
        """Indices of edges whose removal increases the component count."""
        found = []
        for index, (u, v) in enumerate(self.edges):
            if u == v or self.multiplicities[(u, v)] > 1:
                continue
            rest = self.edges[:index] + self.edges[index + 1 :]  # noqa: E203
            if count_components(self.n, rest) > self.component_count:
                found.append(index)
        return found

    @property
    def is_two_edge_connected(self) -> bool:
        return self.component_count == 1 and not self.bridge_indices()

    def to_text(self) -> str:
        """Serializes to the "multigraph n=..." text format."""
        lines = [f"multigraph n={self.n}"]
        for (u, v), count in sorted(self.multiplicities.items()):
            lines.append(f"{u} {v} ×{count}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Multigraph:
        """Parses the "multigraph n=..." text format.

        Args:
            text (str).

        Raises:
            Error: on a malformed header or edge line.

        Returns:
            Multigraph.
        """
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or not lines[0].startswith("multigraph n="):
            raise Error("Missing 'multigraph n=' header")
        try:
            n = int(lines[0][len("multigraph n=") :])  # noqa: E203
        except ValueError:
            raise Error(f"Malformed header: {lines[0]!r}")
        edges: List[Edge] = []
        for line in lines[1:]:
            fields = line.replace("×", " ").replace("x", " ").split()
            if len(fields) != 3:
                raise Error(f"Malformed edge line: {line!r}")
            u, v, count = (int(field) for field in fields)
            if count < 1:
                raise Error(f"Invalid multiplicity in: {line!r}")
            edges.extend([(u, v)] * count)
        return cls(n, tuple(edges))


@dataclasses.dataclass(frozen=True)
class ContractionMap:
    """A cubic multigraph C(G) with the origin of every contracted edge.

    Args:
        contracted (Multigraph).
        edge_origin (Tuple[Tuple[int, ...], ...]): for each contracted edge,
            the vertex sequence in G it replaces; two vertices for an
            original edge, more for a subdivided path.
        vertex_origin (Tuple[int, ...]): the G vertex behind each contracted
            vertex.
    """

    contracted: Multigraph
    edge_origin: Tuple[Tuple[int, ...], ...]
    vertex_origin: Tuple[int, ...]

    def is_path(self, index: int) -> bool:
        return len(self.edge_origin[index]) > 2

    def resubdivide(self) -> Graph:
        """Re-expands every contracted edge into its path.

        The contracted vertices keep their contracted indices and internal
        path vertices are appended, so the result is isomorphic to (not
        equal to) the original graph.
        """
        n = self.contracted.n
        edges: List[Edge] = []
        for (u, v), origin in zip(self.contracted.edges, self.edge_origin):
            start = self.vertex_origin.index(origin[0])
            walk = [start]
            for _ in origin[1:-1]:
                walk.append(n)
                n += 1
            walk.append(v if start == u else u)
            edges.extend(zip(walk, walk[1:]))
        return Graph(n, edges)


def contract_subdivided_paths(graph: Graph) -> ContractionMap:
    """Replaces every subdivided path by a single edge.

    Args:
        graph (Graph): connected, subcubic, minimum degree 2, and not a
            cycle.

    Raises:
        Error: if the contraction is undefined for the graph.

    Returns:
        ContractionMap.
    """
    if graph.n == 0 or not graph.is_connected:
        raise Error("Contraction needs a connected graph")
    degrees = graph.degrees
    if max(degrees) > 3:
        raise Error("Contraction needs a subcubic graph")
    if min(degrees) < 2:
        raise Error(
            f"Vertex {degrees.index(min(degrees))} has degree "
            f"{min(degrees)}; contraction is undefined"
        )
    branch = [v for v in range(graph.n) if degrees[v] == 3]
    if not branch:
        raise Error("Graph is a cycle; contraction is undefined")
    index_of = {vertex: i for i, vertex in enumerate(branch)}
    seen_darts = set()
    edges: List[Edge] = []
    origins: List[Tuple[int, ...]] = []
    for start in branch:
        for first in graph.adjacency[start]:
            if (start, first) in seen_darts:
                continue
            walk = [start, first]
            while degrees[walk[-1]] == 2:
                previous, current = walk[-2], walk[-1]
                (following,) = (
                    w for w in graph.adjacency[current] if w != previous
                )
                walk.append(following)
            seen_darts.add((start, first))
            seen_darts.add((walk[-1], walk[-2]))
            edges.append((index_of[start], index_of[walk[-1]]))
            origins.append(tuple(walk))
    return ContractionMap(
        contracted=Multigraph(len(branch), tuple(edges)),
        edge_origin=tuple(origins),
        vertex_origin=tuple(branch),
    )
