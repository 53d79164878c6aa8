"""Isomorph-free enumeration and seeded random construction.

Connected subcubic graphs are grown one vertex at a time: removing a leaf of
a spanning tree leaves a connected subcubic graph, so adding a vertex to
every smaller graph in every admissible way reaches everything.

Connected bridgeless cubic graphs are the simple members of the closure of
the theta multigraph under edge insertion (subdivide two edges, join the new
vertices). The last ear of an ear decomposition of a 2-edge-connected cubic
multigraph is a single edge, and deleting it and suppressing its ends
reverses one insertion. Intermediates whose parallel-edge defect cannot be
cleared in the remaining steps are dropped.

A cubic graph with a bridge splits into two pieces of odd order, each with
exactly one vertex of degree 2; those pieces come out of the subcubic
enumeration and are joined back through the bridge.

Each level is deduplicated by canonical form over the whole level, not by a
canonicity test on each extension as in orderly generation. Whole levels
are held in memory, which is cheap at these orders.

Every stream is sorted by canonical form and yields canonical
representatives."""

import functools
import itertools
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

import numpy

from . import canonical, corpora, graph6, graphs, named

MAX_MULTIGRAPH_N = corpora.MAX_CUBIC_N

# Ends 0 and 3, central edge 1-2.
_DIAMOND_EDGES = ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))


class Error(Exception):
    """Module-specific exception."""

    pass


def _sorted_representatives(
    forms: Iterable[bytes],
) -> Tuple[graphs.Graph, ...]:
    return tuple(
        graph6.parse_graph6(form.decode("ascii")) for form in sorted(forms)
    )


@functools.cache
def connected_subcubic(n: int) -> Tuple[graphs.Graph, ...]:
    """All connected subcubic graphs of order n, up to isomorphism.

    Args:
        n (int): at most corpora.MAX_SUBCUBIC_N.

    Returns:
        Tuple[graphs.Graph, ...].
    """
    if n > corpora.MAX_SUBCUBIC_N:
        raise Error(f"Subcubic enumeration stops at {corpora.MAX_SUBCUBIC_N}")
    if n < 1:
        return ()
    if n == 1:
        return (graphs.Graph(1, []),)
    forms = set()
    for smaller in connected_subcubic(n - 1):
        open_vertices = [
            v for v in range(smaller.n) if smaller.degrees[v] < 3
        ]
        new = smaller.n
        for size in range(1, 4):
            for neighbors in itertools.combinations(open_vertices, size):
                grown = graphs.Graph(
                    n, list(smaller.edges) + [(v, new) for v in neighbors]
                )
                forms.add(canonical.canonical_form(grown))
    return _sorted_representatives(forms)


def _insert_edge(
    multigraph: graphs.Multigraph, first: int, second: int
) -> graphs.Multigraph:
    """Subdivides two edges (or one edge twice) and joins the new vertices.

    Args:
        multigraph (graphs.Multigraph).
        first (int): index of the first edge.
        second (int): index of the second edge; equal to first to subdivide
            one edge twice, which creates a parallel pair.

    Returns:
        graphs.Multigraph.
    """
    a, b = multigraph.n, multigraph.n + 1
    edges = list(multigraph.edges)
    u, v = edges[first]
    if first == second:
        edges[first] = (u, a)
        edges.extend([(a, b), (a, b), (b, v)])
    else:
        x, y = edges[second]
        edges[first] = (u, a)
        edges[second] = (x, b)
        edges.extend([(a, v), (b, y), (a, b)])
    return graphs.Multigraph(multigraph.n + 2, tuple(edges))


def _insertion_sites(multigraph: graphs.Multigraph) -> List[Tuple[int, int]]:
    """Edge index pairs to insert at, one per pair of parallel classes."""
    first_index: Dict[graphs.Edge, int] = {}
    second_index: Dict[graphs.Edge, int] = {}
    for index, edge in enumerate(multigraph.edges):
        if edge not in first_index:
            first_index[edge] = index
        elif edge not in second_index:
            second_index[edge] = index
    classes = sorted(first_index)
    sites = []
    for i, left in enumerate(classes):
        sites.append((first_index[left], first_index[left]))
        if left in second_index:
            sites.append((first_index[left], second_index[left]))
        for right in classes[i + 1 :]:  # noqa: E203
            sites.append((first_index[left], first_index[right]))
    return sites


@functools.cache
def cubic_multigraphs(
    max_n: int, prune: bool = True
) -> Dict[int, Tuple[graphs.Multigraph, ...]]:
    """2-edge-connected loopless cubic multigraphs by order.

    Args:
        max_n (int): largest order to build.
        prune (bool): whether to drop multigraphs too far from simple to
            become simple by order max_n; without pruning the levels are
            complete.

    Returns:
        Dict[int, Tuple[graphs.Multigraph, ...]].
    """
    if max_n > MAX_MULTIGRAPH_N:
        raise Error(f"Multigraph enumeration stops at {MAX_MULTIGRAPH_N}")
    levels = {2: (named.theta(),)}
    for n in range(4, max_n + 1, 2):
        found: Dict[bytes, graphs.Multigraph] = {}
        for smaller in levels[n - 2]:
            for first, second in _insertion_sites(smaller):
                grown = _insert_edge(smaller, first, second)
                if prune and grown.defect > max_n - n:
                    continue
                form = canonical.multigraph_canonical_form(grown)
                found.setdefault(form, grown)
        levels[n] = tuple(found[form] for form in sorted(found))
    return levels


@functools.cache
def _one_deficient_pieces(n: int) -> Tuple[Tuple[graphs.Graph, int], ...]:
    """Connected graphs with one vertex of degree 2 and the rest cubic.

    Returns:
        Tuple[Tuple[graphs.Graph, int], ...]: each piece with its degree-2
            vertex.
    """
    pieces = []
    for graph in connected_subcubic(n):
        degrees = graph.degrees
        if sorted(degrees) == [2] + [3] * (n - 1):
            pieces.append((graph, degrees.index(2)))
    return tuple(pieces)


def _join(
    left: Tuple[graphs.Graph, int], right: Tuple[graphs.Graph, int]
) -> graphs.Graph:
    (first, p), (second, q) = left, right
    return first.disjoint_union(second).add_edges([(p, first.n + q)])


@functools.cache
def connected_cubic(n: int) -> Tuple[graphs.Graph, ...]:
    """All connected cubic graphs of order n, up to isomorphism.

    Args:
        n (int): even, at most corpora.MAX_CUBIC_N.

    Returns:
        Tuple[graphs.Graph, ...].
    """
    if n > corpora.MAX_CUBIC_N:
        raise Error(f"Cubic enumeration stops at {corpora.MAX_CUBIC_N}")
    if n < 4 or n % 2:
        return ()
    forms = {
        canonical.canonical_form(multigraph.to_graph())
        for multigraph in cubic_multigraphs(n)[n]
        if multigraph.is_simple
    }
    for small in range(5, n // 2 + 1, 2):
        for left in _one_deficient_pieces(small):
            for right in _one_deficient_pieces(n - small):
                forms.add(canonical.canonical_form(_join(left, right)))
    return _sorted_representatives(forms)


def _unions(
    n: int,
    connected: Callable[[int], Tuple[graphs.Graph, ...]],
    min_part: int,
) -> Tuple[graphs.Graph, ...]:
    """All graphs of order n whose components come from connected(k)."""
    forms = set()

    def partitions(
        remaining: int, largest: int
    ) -> Iterator[List[int]]:
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, largest), min_part - 1, -1):
            for rest in partitions(remaining - part, part):
                yield [part] + rest

    for parts in partitions(n, n):
        pools = []
        for part, group in itertools.groupby(parts):
            pools.append(
                itertools.combinations_with_replacement(
                    connected(part), len(list(group))
                )
            )
        for choice in itertools.product(*(list(pool) for pool in pools)):
            union = graphs.Graph(0, [])
            for component in itertools.chain.from_iterable(choice):
                union = union.disjoint_union(component)
            forms.add(canonical.canonical_form(union))
    return _sorted_representatives(forms)


def _cubic(n: int, connected_only: bool) -> Tuple[graphs.Graph, ...]:
    if connected_only:
        return connected_cubic(n)
    return _unions(n, connected_cubic, 4)


def enumerate_graphs(spec: corpora.EnumerationSpec) -> Iterator[graphs.Graph]:
    """Streams every graph of a class and order once, up to isomorphism.

    Args:
        spec (corpora.EnumerationSpec).

    Yields:
        graphs.Graph: canonical representatives, sorted by canonical form.
    """
    if spec.graph_class == corpora.SUBCUBIC:
        if spec.connected_only:
            yield from connected_subcubic(spec.n)
        else:
            yield from _unions(spec.n, connected_subcubic, 1)
        return
    for graph in _cubic(spec.n, spec.connected_only):
        if spec.graph_class == corpora.BICUBIC:
            if not graphs.classify_degrees(graph).is_bipartite:
                continue
        elif spec.graph_class == corpora.CLAWFREE_CUBIC:
            if graphs.find_claws(graph):
                continue
        yield graph


def _pairing(n: int, rng: numpy.random.Generator) -> graphs.Graph:
    """Draws pairing-model cubic graphs until one is simple and connected."""
    while True:
        points = rng.permutation(3 * n) // 3
        pairs = {
            graphs.normalize_edge(int(u), int(v))
            for u, v in points.reshape(-1, 2)
        }
        if len(pairs) != 3 * n // 2 or any(u == v for u, v in pairs):
            continue
        graph = graphs.Graph(n, pairs)
        if graph.is_connected:
            return graph


def random_cubic(n: int, seed: int) -> graphs.Graph:
    """Samples a connected simple cubic graph.

    Args:
        n (int): even, at least 4.
        seed (int).

    Raises:
        Error: on an invalid order.

    Returns:
        graphs.Graph.
    """
    if n < 4 or n % 2:
        raise Error(f"No cubic graph of order {n}")
    return _pairing(n, numpy.random.default_rng(seed))


def random_bridged_cubic(n: int, seed: int) -> graphs.Graph:
    """Samples a connected cubic graph with at least one bridge.

    Each side of the bridge is a random cubic graph with one edge
    subdivided.

    Args:
        n (int): even, at least 10.
        seed (int).

    Raises:
        Error: on an invalid order.

    Returns:
        graphs.Graph.
    """
    if n < 10 or n % 2:
        raise Error(f"No bridged cubic graph of order {n}")
    rng = numpy.random.default_rng(seed)
    left = int(rng.choice(range(5, n - 4, 2)))
    pieces = []
    for size in (left, n - left):
        core = _pairing(size - 1, rng)
        edge = core.edge_list[int(rng.integers(core.m))]
        pieces.append((core.subdivide([edge]), size - 1))
    return _join(*pieces)


def truncate(graph: graphs.Graph) -> graphs.Graph:
    """Replaces every vertex of a cubic graph by a triangle.

    Vertex v becomes 3v, 3v + 1, 3v + 2; its i-th edge in index order leaves
    from corner 3v + i.
    """
    used = [0] * graph.n
    edges = []
    for v in range(graph.n):
        edges.extend([(3 * v, 3 * v + 1), (3 * v + 1, 3 * v + 2)])
        edges.append((3 * v, 3 * v + 2))
    for u, v in graph.edge_list:
        edges.append((3 * u + used[u], 3 * v + used[v]))
        used[u] += 1
        used[v] += 1
    return graphs.Graph(3 * graph.n, edges)


def insert_diamond_string(
    graph: graphs.Graph, edge: graphs.Edge, length: int
) -> graphs.Graph:
    """Replaces an edge by a string of diamonds.

    Args:
        graph (graphs.Graph).
        edge (graphs.Edge).
        length (int): number of diamonds.

    Returns:
        graphs.Graph: new vertices are appended four per diamond.
    """
    if length == 0:
        return graph
    u, v = graphs.normalize_edge(*edge)
    edges = list(graph.delete_edges([(u, v)]).edges)
    previous = u
    n = graph.n
    for _ in range(length):
        edges.extend((n + a, n + b) for a, b in _DIAMOND_EDGES)
        edges.append((previous, n))
        previous = n + 3
        n += 4
    edges.append((previous, v))
    return graphs.Graph(n, edges)


def random_clawfree_cubic(
    core_n: int,
    seed: int,
    max_string: int = 2,
    ring_probability: float = 0.1,
) -> graphs.Graph:
    """Samples a connected claw-free cubic graph.

    Usually truncates a random cubic graph and replaces some of the edges
    between triangles by strings of diamonds; otherwise builds a ring of
    core_n diamonds.

    Args:
        core_n (int): even, at least 4.
        seed (int).
        max_string (int): longest string of diamonds per edge.
        ring_probability (float).

    Returns:
        graphs.Graph.
    """
    rng = numpy.random.default_rng(seed)
    if rng.random() < ring_probability:
        return named.diamond_ring(core_n)
    if core_n < 4 or core_n % 2:
        raise Error(f"No cubic core of order {core_n}")
    graph = truncate(_pairing(core_n, rng))
    connectors = [
        (u, v) for u, v in graph.edge_list if u // 3 != v // 3
    ]
    for edge in connectors:
        graph = insert_diamond_string(
            graph, edge, int(rng.integers(max_string + 1))
        )
    return graph
