import random

import pytest

from sepmatch import graphs, matchings, named, separation


@pytest.mark.parametrize(
    "graph, expected",
    [
        (named.k4(), 0),
        (named.k33(), 0),
        (named.path(3), 1),
        (named.cycle(4), 2),
        (named.cycle(5), 2),
        (named.cycle(6), 3),
        (named.prism(), 3),
        (named.cube(), 4),
        (named.petersen(), 5),
        (named.heawood(), 6),
        (named.bridged_k4_pair(), 5),
    ],
)
def test_mms_exact(graph, expected):
    value, certificate = separation.mms_exact(graph)
    assert value == expected
    if expected:
        certificate.validate(graph)
        assert certificate.size == expected
        assert separation.is_separating(graph, certificate.matching)
    else:
        assert certificate is None


@pytest.mark.parametrize(
    "graph",
    [
        named.k23(),
        named.prism(),
        named.cycle(6),
        named.k4().subdivide([(0, 1)]),
        named.cube(),
    ],
)
def test_mms_matches_oracle(graph):
    value, _ = separation.mms_exact(graph)
    assert value == separation.mms_oracle(graph)


def test_oracle_edge_bound(heawood):
    big = heawood.disjoint_union(named.k4())
    with pytest.raises(separation.Error):
        separation.mms_oracle(big)


def test_disconnected_input():
    with pytest.raises(separation.Error, match="not connected"):
        separation.mms_exact(named.k3().disjoint_union(named.k3()))


def test_is_separating(prism):
    rungs = matchings.Matching({(0, 3), (1, 4), (2, 5)})
    assert separation.is_separating(prism, rungs)
    assert not separation.is_separating(
        prism, matchings.Matching({(0, 1), (3, 4)})
    )
    assert not separation.is_separating(prism, matchings.Matching())


def test_is_separating_rejects_non_matching(prism):
    with pytest.raises(separation.Error):
        separation.is_separating(prism, matchings.Matching({(0, 1), (0, 2)}))


def test_matching_cuts_are_distinct(prism):
    cuts = list(separation.enumerate_matching_cuts(named.cycle(5)))
    assert len(cuts) == 5
    assert len({cut.side for cut in cuts}) == 5
    for cut in cuts:
        assert 0 in cut.side
        assert len(cut.cut) == 2
    sides = [cut.side for cut in separation.enumerate_matching_cuts(prism)]
    assert sides == [{0, 1, 2}]


@pytest.mark.parametrize(
    "index, graph", list(enumerate(named.exceptional_subcubic()))
)
def test_exceptional_subcubic(index, graph):
    found, certificate = separation.is_decomposable(graph)
    assert not found
    assert certificate is None
    relabeled = graph.relabel(list(reversed(range(graph.n))))
    assert separation.recognize_exceptional_subcubic(relabeled) == index


@pytest.mark.parametrize(
    "graph", [named.path(3), named.cycle(4), named.prism()]
)
def test_decomposable(graph):
    found, certificate = separation.is_decomposable(graph)
    assert found
    certificate.validate(graph)
    assert separation.recognize_exceptional_subcubic(graph) is None


def test_recognize_rejects_non_subcubic():
    with pytest.raises(separation.Error):
        separation.recognize_exceptional_subcubic(named.star(4))


def test_bridge_separating_matching():
    graph = named.bridged_k4_pair()
    certificate = separation.bridge_separating_matching(graph, (4, 9))
    assert (4, 9) in certificate.matching.edges
    assert certificate.size >= matchings.maximum_matching(graph).size - 1


def test_bridge_separating_matching_needs_bridge():
    with pytest.raises(separation.Error, match="not a bridge"):
        separation.bridge_separating_matching(named.bridged_k4_pair(), (0, 2))


def test_bridge_disconnecting_pm():
    graph = named.bridged_k4_pair()
    matching = separation.bridge_disconnecting_pm(graph)
    assert matching.is_perfect(graph)
    assert (4, 9) in matching.edges


def test_bridge_disconnecting_pm_needs_bridge(prism):
    with pytest.raises(separation.Error, match="no bridge"):
        separation.bridge_disconnecting_pm(prism)


def test_parallel_pair_cut():
    multigraph = graphs.Multigraph(
        4, ((0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3))
    )
    found, witness = separation.mms_multigraph_decomposable(multigraph)
    assert found
    assert witness == {4, 5}
    assert separation.multigraph_matching_cut_oracle(multigraph) is not None


@pytest.mark.parametrize(
    "multigraph",
    [
        named.theta(),
        graphs.Multigraph.from_graph(named.k4()),
        graphs.Multigraph.from_graph(named.k33()),
    ],
)
def test_nondecomposable_multigraphs(multigraph):
    assert separation.mms_multigraph_decomposable(multigraph) == (False, None)
    assert separation.multigraph_matching_cut_oracle(multigraph) is None


def test_multigraph_needs_two_edge_connected():
    multigraph = graphs.Multigraph.from_graph(named.bridged_k4_pair())
    with pytest.raises(separation.Error):
        separation.mms_multigraph_decomposable(multigraph)


def test_lift_cut_from_contraction(prism):
    graph = prism.subdivide([(0, 3)])
    contraction = graphs.contract_subdivided_paths(graph)
    found, cut = separation.mms_multigraph_decomposable(
        contraction.contracted
    )
    assert found
    lifted = separation.lift_cut_from_contraction(graph, contraction, cut)
    assert lifted.size == 3
    assert separation.is_separating(graph, lifted)


def test_lift_rejects_non_cut():
    graph = named.k23()
    contraction = graphs.contract_subdivided_paths(graph)
    with pytest.raises(separation.Error):
        separation.lift_cut_from_contraction(graph, contraction, [0])


def test_subdivided_star_cut():
    graph, certificate = separation.subdivided_star_cut(
        named.k4(), 0, [(0, 1), (0, 2)]
    )
    assert graph.n == 6
    assert certificate.witness_side == {0, 4, 5}
    assert certificate.matching.edges == {(0, 3), (1, 4), (2, 5)}


def test_subdivided_star_cut_needs_two_edges():
    with pytest.raises(separation.Error):
        separation.subdivided_star_cut(named.k4(), 0, [(0, 1), (1, 2)])


@pytest.mark.parametrize("graph", [named.prism(), named.cube()])
def test_planar_bridgeless_cubic_have_disconnecting_pm(graph):
    value, certificate = separation.mms_exact(graph)
    assert value == graph.n // 2
    assert certificate.matching.is_perfect(graph)


@pytest.mark.parametrize(
    "graph",
    [
        named.cycle(6),
        named.prism(),
        named.cube(),
        named.petersen(),
        named.bridged_k4_pair(),
    ],
)
def test_extended_cuts_stay_separating(graph):
    rng = random.Random(graph.n)
    for cut in separation.enumerate_matching_cuts(graph):
        edges = set(cut.cut)
        covered = {v for edge in edges for v in edge}
        candidates = list(graph.edge_list)
        rng.shuffle(candidates)
        for u, v in candidates:
            if u in covered or v in covered or rng.random() < 0.5:
                continue
            edges.add((u, v))
            covered.update((u, v))
        assert separation.is_separating(graph, matchings.Matching(edges))
