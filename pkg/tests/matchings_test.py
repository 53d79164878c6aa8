import pytest

from sepmatch import matchings, named


@pytest.mark.parametrize(
    "graph, count",
    [
        (named.k4(), 3),
        (named.k33(), 6),
        (named.prism(), 4),
        (named.cube(), 9),
        (named.petersen(), 6),
        (named.heawood(), 24),
    ],
)
def test_perfect_matching_count(graph, count):
    found = list(matchings.enumerate_perfect_matchings(graph))
    assert len(found) == count
    assert len(set(found)) == count
    for matching in found:
        matching.validate(graph)
        assert matching.is_perfect(graph)


def test_perfect_matchings_odd_order():
    with pytest.raises(matchings.Error):
        list(matchings.enumerate_perfect_matchings(named.k3()))


@pytest.mark.parametrize(
    "graph, count",
    [(named.path(3), 3), (named.k3(), 4), (named.k4(), 10)],
)
def test_matching_count(graph, count):
    found = list(matchings.enumerate_matchings(graph))
    assert len(found) == count
    assert found[0].size == 0


@pytest.mark.parametrize(
    "graph, size",
    [
        (named.petersen(), 5),
        (named.k23(), 2),
        (named.cycle(7), 3),
        (named.bridged_k4_pair(), 5),
    ],
)
def test_maximum_matching(graph, size):
    matching = matchings.maximum_matching(graph)
    matching.validate(graph)
    assert matching.size == size


def test_maximum_matching_avoiding(prism):
    matching = matchings.maximum_matching_avoiding(prism, [0, 3])
    assert matching.size == 2
    assert not matching.vertices & {0, 3}


def test_validate_rejects_non_edge(prism):
    with pytest.raises(matchings.Error, match="not in the graph"):
        matchings.Matching({(0, 4)}).validate(prism)


def test_validate_rejects_shared_vertex(prism):
    with pytest.raises(matchings.Error, match="matched twice"):
        matchings.Matching({(0, 1), (1, 2)}).validate(prism)


@pytest.mark.parametrize("graph", [named.k33(), named.cube(), named.heawood()])
def test_coloring(graph):
    coloring = matchings.proper_3_edge_coloring(graph)
    coloring.validate(graph)
    for matching in coloring.classes():
        assert matching.is_perfect(graph)


def test_coloring_needs_bicubic(prism):
    with pytest.raises(matchings.Error):
        matchings.proper_3_edge_coloring(prism)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (named.k4(), True),
        (named.k33(), True),
        (named.heawood(), True),
        (named.prism(), False),
        (named.cube(), False),
        (named.petersen(), False),
    ],
)
def test_two_factor_hamiltonian(graph, expected):
    verdict, certificate = matchings.is_two_factor_hamiltonian(graph)
    assert verdict == expected
    if expected:
        assert certificate is None
    else:
        assert certificate.component_count > 1
        assert set(certificate.degrees) == {2}


def test_two_factor_hamiltonian_needs_cubic():
    with pytest.raises(matchings.Error):
        matchings.is_two_factor_hamiltonian(named.cycle(4))


def test_validate_almost_two_factor(prism):
    # Triangle 0,1,2 plus triangle 3,4,5 with the rung 0-3 added.
    certificate = matchings.SpanningSubgraphCertificate(
        6, {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)}
    )
    ok, reason = matchings.validate_almost_two_factor(prism, certificate)
    assert not ok
    assert reason == "certificate is connected"


def test_validate_almost_two_factor_census(prism):
    certificate = matchings.SpanningSubgraphCertificate(
        6, {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    )
    ok, reason = matchings.validate_almost_two_factor(prism, certificate)
    assert not ok
    assert "degree 3" in reason


def test_complement(prism):
    certificate = matchings.SpanningSubgraphCertificate(
        6, {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    )
    assert certificate.complement(prism).edges == {(0, 3), (1, 4), (2, 5)}


def test_heawood_perfect_matchings_agree(heawood):
    by_backtracking = set(matchings.enumerate_perfect_matchings(heawood))
    by_scan = {
        matching
        for matching in matchings.enumerate_matchings(heawood)
        if matching.is_perfect(heawood)
    }
    assert by_scan == by_backtracking
    assert len(by_scan) == 24


def test_two_factor_components(prism):
    rungs = matchings.Matching({(0, 3), (1, 4), (2, 5)})
    assert matchings.two_factor_components(prism, rungs) == [
        [0, 1, 2],
        [3, 4, 5],
    ]
