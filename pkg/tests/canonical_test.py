import random

import pytest

from sepmatch import canonical, graphs, named


@pytest.mark.parametrize(
    "graph",
    [named.k4(), named.prism(), named.petersen(), named.heawood()],
)
def test_relabeling_preserves_form(graph):
    expected = canonical.canonical_form(graph)
    rng = random.Random(graph.n)
    permutation = list(range(graph.n))
    for _ in range(100):
        rng.shuffle(permutation)
        relabeled = graph.relabel(permutation)
        assert canonical.canonical_form(relabeled) == expected


def test_canonical_graph_is_isomorphic(heawood):
    relabeled = canonical.canonical_graph(heawood)
    assert canonical.are_isomorphic(relabeled, heawood)


@pytest.mark.parametrize(
    "first, second",
    [
        (named.prism(), named.k33()),
        (named.cube(), named.diamond_ring(2)),
        (named.cycle(6), named.k3().disjoint_union(named.k3())),
    ],
)
def test_distinguishes(first, second):
    assert not canonical.are_isomorphic(first, second)


def test_disconnected_graphs():
    first = named.k3().disjoint_union(named.path(2))
    second = named.path(2).disjoint_union(named.k3())
    assert canonical.are_isomorphic(first, second)


def test_multigraph_forms():
    first = graphs.Multigraph(3, ((0, 1), (0, 1), (1, 2)))
    second = graphs.Multigraph(3, ((1, 2), (2, 0), (2, 1)))
    third = graphs.Multigraph(3, ((0, 1), (1, 2), (0, 2)))
    assert canonical.multigraph_canonical_form(
        first
    ) == canonical.multigraph_canonical_form(second)
    assert canonical.multigraph_canonical_form(
        first
    ) != canonical.multigraph_canonical_form(third)


def test_size_bound():
    with pytest.raises(canonical.Error):
        canonical.canonical_form(named.cycle(canonical.MAX_N + 1))
