import networkx
import pytest

from sepmatch import graphs, named


@pytest.mark.parametrize(
    "graph, n, m",
    [
        (named.k4(), 4, 6),
        (named.k33(), 6, 9),
        (named.prism(), 6, 9),
        (named.cube(), 8, 12),
        (named.petersen(), 10, 15),
        (named.heawood(), 14, 21),
        (named.bridged_k4_pair(), 10, 15),
        (named.diamond_ring(3), 12, 18),
        (named.exceptional_f1(), 10, 15),
        (named.exceptional_f2(), 14, 21),
        (named.exceptional_f3(), 18, 27),
    ],
)
def test_cubic_named(graph, n, m):
    assert (graph.n, graph.m) == (n, m)
    profile = graphs.classify_degrees(graph)
    assert profile.is_cubic
    assert graph.is_connected


@pytest.mark.parametrize("graph", [named.heawood(), *named.exceptional_f()])
def test_family_named_are_bicubic(graph):
    assert graphs.classify_degrees(graph).is_bicubic


def test_heawood_girth():
    girth = min(
        len(cycle)
        for cycle in networkx.minimum_cycle_basis(
            named.heawood().to_networkx()
        )
    )
    assert girth == 6


def test_exceptional_subcubic():
    exceptional = named.exceptional_subcubic()
    assert len(exceptional) == 8
    for graph in exceptional:
        assert graph.is_connected
        assert graphs.classify_degrees(graph).is_subcubic


def test_diamond_ring_needs_two():
    with pytest.raises(graphs.Error):
        named.diamond_ring(1)
