"""Canonical forms by color refinement and individualization.

Each connected component is labeled separately: vertices start colored by
degree, colors are refined until stable, and ties are broken by
individualizing every vertex of the first smallest non-singleton cell in
turn. The leaf whose relabeled upper-triangular adjacency matrix is
lexicographically greatest wins. Components are then concatenated in order of
their certificates.

This is exact and exponential in the worst case; vertex-transitive graphs
visit one leaf per automorphism, which is affordable up to MAX_N."""

import functools
from typing import Dict, List, Sequence, Tuple

import numpy

from . import graph6, graphs

MAX_N = 32

_Neighbors = List[List[Tuple[int, int]]]


class Error(Exception):
    """Module-specific exception."""

    pass


def _rank(signatures: Sequence) -> List[int]:
    ranking = {
        signature: rank
        for rank, signature in enumerate(sorted(set(signatures)))
    }
    return [ranking[signature] for signature in signatures]


def _refine(neighbors: _Neighbors, colors: List[int]) -> List[int]:
    """Refines a coloring until it is equitable.

    Colors are always ranks 0..k-1 and a refined cell keeps its position
    relative to the other cells, so the result is isomorphism-invariant.
    """
    count = len(set(colors))
    while True:
        refined = _rank(
            [
                (
                    colors[v],
                    tuple(sorted((colors[w], mult) for w, mult in row)),
                )
                for v, row in enumerate(neighbors)
            ]
        )
        new_count = len(set(refined))
        if new_count == count:
            return refined
        colors, count = refined, new_count


def _target_cell(colors: List[int]) -> List[int]:
    cells: Dict[int, List[int]] = {}
    for vertex, color in enumerate(colors):
        cells.setdefault(color, []).append(vertex)
    candidates = [cell for cell in cells.values() if len(cell) > 1]
    size = min(len(cell) for cell in candidates)
    return min(
        (cell for cell in candidates if len(cell) == size),
        key=lambda cell: colors[cell[0]],
    )


def _canonical_order(
    n: int, edges: Sequence[graphs.Edge]
) -> Tuple[bytes, List[int]]:
    """Labels one connected (multi)graph.

    Args:
        n (int).
        edges (Sequence[graphs.Edge]): possibly with repeats and loops.

    Returns:
        Tuple[bytes, List[int]]: the certificate, and the vertices in
            canonical order.
    """
    matrix = numpy.zeros((n, n), dtype=numpy.uint8)
    for u, v in edges:
        matrix[u, v] += 1
        if u != v:
            matrix[v, u] += 1
    neighbors: _Neighbors = [
        [(w, int(matrix[v, w])) for w in range(n) if w != v and matrix[v, w]]
        for v in range(n)
    ]
    upper = numpy.triu_indices(n)
    initial = _rank(
        [
            (sum(mult for _, mult in row), int(matrix[v, v]))
            for v, row in enumerate(neighbors)
        ]
    )
    best: List = [b"", []]

    def search(colors: List[int]) -> None:
        if len(set(colors)) == n:
            order = sorted(range(n), key=colors.__getitem__)
            key = matrix[numpy.ix_(order, order)][upper].tobytes()
            if key > best[0]:
                best[0], best[1] = key, order
            return
        for vertex in _target_cell(colors):
            individualized = _rank(
                [(color, w != vertex) for w, color in enumerate(colors)]
            )
            search(_refine(neighbors, individualized))

    search(_refine(neighbors, initial))
    return best[0], best[1]


def _canonical_labeling(
    n: int, edges: Sequence[graphs.Edge]
) -> Tuple[List[Tuple[int, bytes]], List[int]]:
    """Labels a (multi)graph component by component.

    Returns:
        Tuple[List[Tuple[int, bytes]], List[int]]: the sorted component
            certificates, and the permutation sending each vertex to its
            canonical position.
    """
    if n > MAX_N:
        raise Error(f"Canonical forms support at most {MAX_N} vertices")
    _, labels = graphs.component_labels(n, edges)
    blocks = graphs.partition_by_labels(n, labels)
    block_of = {v: i for i, block in enumerate(blocks) for v in block}
    local = {v: block.index(v) for block in blocks for v in block}
    block_edges: List[List[graphs.Edge]] = [[] for _ in blocks]
    for u, v in edges:
        block_edges[block_of[u]].append((local[u], local[v]))
    labeled = []
    for block, inner in zip(blocks, block_edges):
        key, order = _canonical_order(len(block), inner)
        labeled.append(((len(block), key), [block[i] for i in order]))
    labeled.sort(key=lambda item: item[0])
    permutation = [0] * n
    position = 0
    for _, order in labeled:
        for vertex in order:
            permutation[vertex] = position
            position += 1
    return [certificate for certificate, _ in labeled], permutation


def canonical_permutation(graph: graphs.Graph) -> List[int]:
    """Returns the permutation taking a graph to its canonical relabeling.

    Args:
        graph (graphs.Graph).

    Returns:
        List[int]: vertex v moves to position permutation[v].
    """
    return _canonical_labeling(graph.n, graph.edge_list)[1]


def canonical_graph(graph: graphs.Graph) -> graphs.Graph:
    return graph.relabel(canonical_permutation(graph))


@functools.lru_cache(maxsize=65536)
def canonical_form(graph: graphs.Graph) -> bytes:
    """Computes the canonical byte string of a graph.

    Two graphs have the same form iff they are isomorphic. The form is the
    graph6 encoding of the canonical relabeling, so it is also a valid
    representative.

    Args:
        graph (graphs.Graph): at most MAX_N vertices.

    Raises:
        Error: above the size bound.

    Returns:
        bytes.
    """
    return graph6.emit_graph6(canonical_graph(graph)).encode("ascii")


def multigraph_canonical_form(multigraph: graphs.Multigraph) -> bytes:
    """Computes the canonical byte string of a multigraph.

    Args:
        multigraph (graphs.Multigraph): at most MAX_N vertices.

    Raises:
        Error: above the size bound.

    Returns:
        bytes: a header naming the order, then the canonically relabeled
            upper-triangular multiplicity matrix.
    """
    _, permutation = _canonical_labeling(multigraph.n, multigraph.edges)
    n = multigraph.n
    matrix = numpy.zeros((n, n), dtype=numpy.uint8)
    for u, v in multigraph.edges:
        a, b = sorted((permutation[u], permutation[v]))
        matrix[a, b] += 1
    return f"multigraph:{n}:".encode("ascii") + matrix[
        numpy.triu_indices(n)
    ].tobytes()


def are_isomorphic(first: graphs.Graph, second: graphs.Graph) -> bool:
    """Decides isomorphism by comparing canonical forms.

    Raises:
        Error: above the size bound.
    """
    if max(first.n, second.n) > MAX_N:
        raise Error(f"Canonical forms support at most {MAX_N} vertices")
    if first.n != second.n or first.m != second.m:
        return False
    if sorted(first.degrees) != sorted(second.degrees):
        return False
    return canonical_form(first) == canonical_form(second)
