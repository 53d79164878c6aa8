"""Named graphs and multigraphs.

Everything here is built from an explicit construction; nothing is
transcribed from a drawing. Constructors are cached since graphs are
immutable."""

import functools
import itertools
from typing import List, Tuple

from . import graphs


def complete(n: int) -> graphs.Graph:
    return graphs.Graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> graphs.Graph:
    """K_{a,b} with sides 0..a-1 and a..a+b-1."""
    return graphs.Graph(
        a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def cycle(n: int) -> graphs.Graph:
    return graphs.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> graphs.Graph:
    return graphs.Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> graphs.Graph:
    return graphs.Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@functools.cache
def k3() -> graphs.Graph:
    return complete(3)


@functools.cache
def k4() -> graphs.Graph:
    return complete(4)


@functools.cache
def k4_minus_edge() -> graphs.Graph:
    return k4().delete_edges([(2, 3)])


@functools.cache
def k23() -> graphs.Graph:
    """K2,3; the degree-3 vertices are 0 and 1."""
    return complete_bipartite(2, 3)


@functools.cache
def k33() -> graphs.Graph:
    return complete_bipartite(3, 3)


@functools.cache
def prism() -> graphs.Graph:
    """Triangles 0,1,2 and 3,4,5 with rungs i-(i+3)."""
    return graphs.Graph(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        + [(i, i + 3) for i in range(3)],
    )


@functools.cache
def cube() -> graphs.Graph:
    """The 3-cube Q3 on bit vectors."""
    return graphs.Graph(
        8,
        [(v, v | bit) for v in range(8) for bit in (1, 2, 4) if not v & bit],
    )


@functools.cache
def petersen() -> graphs.Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return graphs.Graph(10, outer + inner + spokes)


@functools.cache
def heawood() -> graphs.Graph:
    """The Heawood graph H0: a 14-cycle with chords i-(i+5) for even i."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges.extend((i, (i + 5) % 14) for i in range(0, 14, 2))
    return graphs.Graph(14, edges)


def diamond_ring(diamonds: int) -> graphs.Graph:
    """A ring of diamonds.

    Diamond i occupies 4i..4i+3; 4i and 4i+3 are its degree-2 ends and
    4i+1, 4i+2 its central edge. End 4i+3 is joined to 4(i+1).

    Args:
        diamonds (int): at least 2.
    """
    if diamonds < 2:
        raise graphs.Error("A ring needs at least two diamonds")
    edges: List[graphs.Edge] = []
    for i in range(diamonds):
        base = 4 * i
        edges.extend(
            (base + a, base + b)
            for a, b in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))
        )
        edges.append((base + 3, (base + 4) % (4 * diamonds)))
    return graphs.Graph(4 * diamonds, edges)


@functools.cache
def bridged_k4_pair() -> graphs.Graph:
    """The smallest cubic graph with a bridge.

    Two copies of K4 with one edge subdivided; the subdivision vertices 4 and
    9 are joined by the bridge.
    """
    half = k4().subdivide([(0, 1)])
    joined = half.disjoint_union(half)
    return joined.add_edges([(4, 9)])


@functools.cache
def theta() -> graphs.Multigraph:
    """S2, the cubic multigraph on two vertices with three parallel edges."""
    return graphs.Multigraph(2, ((0, 1),) * 3)


@functools.cache
def exceptional_subcubic() -> Tuple[graphs.Graph, ...]:
    """The eight connected subcubic graphs without a matching cut.

    Index order: K3, K4 - e, K2,3, K4, K3,3, K4 with one edge subdivided, K4
    with two independent edges subdivided, K3,3 with one edge subdivided.
    """
    return (
        k3(),
        k4_minus_edge(),
        k23(),
        k4(),
        k33(),
        k4().subdivide([(0, 1)]),
        k4().subdivide([(0, 1), (2, 3)]),
        k33().subdivide([(0, 3)]),
    )


def _k23_blocks(count: int) -> Tuple[List[graphs.Edge], List[List[int]]]:
    """Disjoint K2,3 copies; returns their edges and degree-2 vertices."""
    edges: List[graphs.Edge] = []
    ends = []
    for block in range(count):
        base = 5 * block
        edges.extend((base + u, base + v) for u, v in k23().edge_list)
        ends.append([base + 2, base + 3, base + 4])
    return edges, ends


@functools.cache
def exceptional_f1() -> graphs.Graph:
    """Two K2,3 with their degree-2 vertices joined by a matching."""
    edges, (left, right) = _k23_blocks(2)
    edges.extend(zip(left, right))
    return graphs.Graph(10, edges)


@functools.cache
def exceptional_f2() -> graphs.Graph:
    """Two K2,3 and a claw block.

    The claw center is 13 with leaves 10, 11, 12; leaf 10 + j is joined to the
    j-th degree-2 vertex of each K2,3.
    """
    edges, (left, right) = _k23_blocks(2)
    for j in range(3):
        edges.extend([(10 + j, 13), (10 + j, left[j]), (10 + j, right[j])])
    return graphs.Graph(14, edges)


@functools.cache
def exceptional_f3() -> graphs.Graph:
    """Three K2,3 and three connectors.

    Connector 15 + j is joined to the j-th degree-2 vertex of every K2,3.
    """
    edges, ends = _k23_blocks(3)
    for j in range(3):
        edges.extend((15 + j, block[j]) for block in ends)
    return graphs.Graph(18, edges)


@functools.cache
def exceptional_f() -> Tuple[graphs.Graph, ...]:
    """The four members of the family without an almost 2-factor."""
    return (k33(), exceptional_f1(), exceptional_f2(), exceptional_f3())
