import pytest

from sepmatch import canonical, corpora, generators, graphs, named


def _count(n, graph_class=corpora.CUBIC, connected_only=True):
    spec = corpora.EnumerationSpec(
        n, graph_class=graph_class, connected_only=connected_only
    )
    return sum(1 for _ in generators.enumerate_graphs(spec))


@pytest.mark.parametrize(
    "n, count", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)]
)
def test_connected_cubic_counts(n, count):
    assert _count(n) == count


@pytest.mark.slow
def test_connected_cubic_14():
    assert _count(14) == 509


@pytest.mark.parametrize(
    "n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 10)]
)
def test_connected_subcubic_counts(n, count):
    assert _count(n, corpora.SUBCUBIC) == count


@pytest.mark.parametrize(
    "n, count", [(4, 0), (6, 1), (8, 1), (10, 2), (12, 5)]
)
def test_bicubic_counts(n, count):
    assert _count(n, corpora.BICUBIC) == count


@pytest.mark.slow
def test_bicubic_14():
    assert _count(14, corpora.BICUBIC) == 13


def test_disconnected_cubic():
    # The connected five plus the disjoint union of two K4.
    assert _count(8, connected_only=False) == 6


def test_disconnected_subcubic():
    # Every graph on three vertices.
    assert _count(3, corpora.SUBCUBIC, connected_only=False) == 4


@pytest.mark.parametrize("n", [6, 8, 10])
def test_streams_are_sound(n):
    seen = set()
    for graph in generators.enumerate_graphs(corpora.EnumerationSpec(n)):
        assert graphs.classify_degrees(graph).is_cubic
        assert graph.is_connected
        form = canonical.canonical_form(graph)
        assert form not in seen
        seen.add(form)


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_clawfree_stream(n):
    spec = corpora.EnumerationSpec(n, graph_class=corpora.CLAWFREE_CUBIC)
    for graph in generators.enumerate_graphs(spec):
        assert not graphs.find_claws(graph)


def test_cubic_multigraph_levels():
    levels = generators.cubic_multigraphs(6, prune=False)
    assert levels[2] == (named.theta(),)
    for n, level in levels.items():
        for multigraph in level:
            assert multigraph.n == n
            assert multigraph.is_cubic
            assert multigraph.is_two_edge_connected


def test_random_cubic_is_deterministic():
    assert generators.random_cubic(12, 7) == generators.random_cubic(12, 7)


def test_random_cubic():
    assert canonical.are_isomorphic(generators.random_cubic(4, 0), named.k4())
    for seed in range(10):
        graph = generators.random_cubic(10, seed)
        assert graphs.classify_degrees(graph).is_cubic
        assert graph.is_connected


@pytest.mark.parametrize("n", [3, 2, 7])
def test_random_cubic_order(n):
    with pytest.raises(generators.Error):
        generators.random_cubic(n, 0)


@pytest.mark.parametrize("seed", range(5))
def test_random_bridged_cubic(seed):
    graph = generators.random_bridged_cubic(14, seed)
    assert graph.n == 14
    assert graphs.classify_degrees(graph).is_cubic
    assert graph.is_connected
    assert graphs.bridges(graph)


def test_truncate():
    graph = generators.truncate(named.k4())
    assert graph.n == 12
    assert graphs.classify_degrees(graph).is_cubic
    assert not graphs.find_claws(graph)


@pytest.mark.parametrize("seed", range(20))
def test_random_clawfree_cubic(seed):
    graph = generators.random_clawfree_cubic(6, seed)
    assert graphs.classify_degrees(graph).is_cubic
    assert graph.is_connected
    assert not graphs.find_claws(graph)


def test_subcubic_bound():
    with pytest.raises(generators.Error):
        generators.connected_subcubic(corpora.MAX_SUBCUBIC_N + 1)
