import pytest

from sepmatch import (
    canonical,
    family,
    graphs,
    matchings,
    named,
    reports,
    separation,
)


def test_k33_square_is_f1():
    product = family.star_product(
        family.StarProductSpec(named.k33(), 0, named.k33(), 0)
    )
    assert product.n == 10
    assert canonical.are_isomorphic(product, named.exceptional_f1())


def test_star_product_layout():
    spec = family.StarProductSpec(named.k33(), 0, named.k33(), 0)
    product = family.star_product(spec)
    # Vertices 0..4 are K3,3 - 0 and 5..9 the second copy.
    assert graphs.classify_degrees(product).is_bicubic
    assert product.boundary(range(5)) == {(2, 7), (3, 8), (4, 9)}


def test_swapped_pairing_is_inverse():
    spec = family.StarProductSpec(
        named.k33(), 0, named.heawood(), 0, (1, 2, 0)
    )
    swapped = spec.swapped()
    assert swapped.g1 == named.heawood()
    assert swapped.pairing == (2, 0, 1)
    assert canonical.are_isomorphic(
        family.star_product(spec), family.star_product(swapped)
    )


@pytest.mark.parametrize(
    "kwargs",
    [
        {"g1": named.k23(), "u": 0, "g2": named.k33(), "v": 0},
        {"g1": named.k33(), "u": 6, "g2": named.k33(), "v": 0},
        {"g1": named.k33(), "u": 0, "g2": named.k33(), "v": -1},
        {
            "g1": named.k33(),
            "u": 0,
            "g2": named.k33(),
            "v": 0,
            "pairing": (0, 0, 1),
        },
    ],
)
def test_spec_errors(kwargs):
    with pytest.raises(family.Error):
        family.StarProductSpec(**kwargs)


def test_unknown_base():
    with pytest.raises(family.Error):
        family.base_graph("K4")


@pytest.mark.parametrize("max_n, count", [(6, 1), (10, 2), (14, 5)])
def test_generate_family_f(max_n, count):
    members = family.generate_family_f(max_n)
    assert len(members) == count
    orders = [member.graph.n for member in members]
    assert orders == sorted(orders)
    for member in members:
        assert member.replay() == member.graph
        assert graphs.classify_degrees(member.graph).is_bicubic


def test_generate_family_f_bound():
    with pytest.raises(family.Error):
        family.generate_family_f(family.MAX_N + 2)


def test_member_json():
    member = family.generate_family_f(10)[1]
    document = member.to_json()
    assert document["n"] == 10
    assert document["base"] == family.K33
    assert document["trace"] == [
        {"base": family.K33, "u": 0, "v": 0, "pairing": (0, 1, 2)}
    ]
    assert member.is_k33_chain


@pytest.mark.parametrize(
    "graph, base, count",
    [
        (named.k33(), named.k33(), 1),
        (named.exceptional_f1(), named.k33(), 2),
        (named.exceptional_f2(), named.k33(), 4),
        (named.exceptional_f3(), named.k33(), 3),
    ],
)
def test_star_product_classes(graph, base, count):
    assert len(family.star_product_classes(graph, base)) == count


def test_star_product_classes_any_v():
    assert family.star_product_classes(
        named.k33(), named.k33(), all_v=True
    ) == family.star_product_classes(named.k33(), named.k33())


@pytest.mark.parametrize(
    "graph, base",
    [
        (named.k33(), family.K33),
        (named.exceptional_f1(), family.K33),
        (named.heawood(), family.H0),
    ],
)
def test_is_in_family_f(graph, base):
    relabeled = graph.relabel(list(reversed(range(graph.n))))
    member = family.is_in_family_f(relabeled)
    assert member is not None
    assert member.base == base
    assert canonical.are_isomorphic(member.graph, graph)


def test_cube_is_not_in_family_f():
    assert family.is_in_family_f(named.cube()) is None


def test_membership_needs_bicubic(prism):
    with pytest.raises(family.Error):
        family.is_in_family_f(prism)


def test_heawood_almost_two_factor(heawood):
    member = family.is_in_family_f(heawood)
    certificate = family.almost_two_factor(member)
    ok, reason = matchings.validate_almost_two_factor(
        member.graph, certificate
    )
    assert ok, reason


@pytest.mark.parametrize(
    "graph, index",
    [(named.k33(), 0), (named.exceptional_f1(), 1)],
)
def test_exceptional_members(graph, index):
    result = family.almost_two_factor(family.is_in_family_f(graph))
    assert isinstance(result, family.ExceptionalF)
    assert result.index == index
    assert result.to_json()["type"] == "exceptional"


def test_almost_two_factors_up_to_14():
    exceptional = []
    for member in family.generate_family_f(14):
        result = family.almost_two_factor(member)
        if isinstance(result, family.ExceptionalF):
            exceptional.append(result.index)
            continue
        ok, reason = matchings.validate_almost_two_factor(
            member.graph, result
        )
        assert ok, reason
    assert sorted(exceptional) == [0, 1, 2]


@pytest.mark.slow
def test_almost_two_factors_up_to_22():
    for member in family.generate_family_f(22):
        result = family.almost_two_factor(member)
        if isinstance(result, family.ExceptionalF):
            assert result.index in family.EXCEPTIONAL_BOUNDS
        else:
            ok, reason = matchings.validate_almost_two_factor(
                member.graph, result
            )
            assert ok, reason


def test_extend_from_base_through_heawood():
    spec = family.StarProductSpec(named.k33(), 0, named.heawood(), 0)
    member = family.FamilyFMember(
        family.star_product(spec),
        family.K33,
        (family.FamilyStep(family.H0, 0, 0, (0, 1, 2)),),
    )
    certificate = family.almost_two_factor(member)
    ok, reason = matchings.validate_almost_two_factor(
        member.graph, certificate
    )
    assert ok, reason


def test_exceptional_f_values():
    values = family.exceptional_f_values()
    assert values["F0"] == 0
    assert values["F1"] == 3
    assert values["F2"] == 5
    assert values["F3"] <= 7


def test_recognize_exceptional_f():
    assert family.recognize_exceptional_f(named.exceptional_f2()) == 2
    assert family.recognize_exceptional_f(named.heawood()) is None


@pytest.mark.parametrize(
    "g1, g2",
    [
        (named.k33(), named.k33()),
        (named.heawood(), named.k33()),
        (named.cube(), named.k33()),
    ],
)
def test_gorsky_check(g1, g2):
    assert family.gorsky_check(family.StarProductSpec(g1, 0, g2, 0))


def test_gorsky_check_needs_bicubic(prism):
    with pytest.raises(family.Error):
        family.gorsky_check(family.StarProductSpec(prism, 0, named.k33(), 0))


def test_funk_scan():
    report = family.funk_scan(10)
    assert report.theorem_id == "conj-funk"
    assert report.status == reports.VERIFIED
    assert report.graphs_checked == 4
    assert report.counts == {"in_family_f=False": 2, "in_family_f=True": 2}
    assert [record["n"] for record in report.records] == [6, 8, 10, 10]


@pytest.mark.parametrize(
    "max_n", [14, pytest.param(18, marks=pytest.mark.slow)]
)
def test_three_edge_cuts_take_every_color(max_n):
    for member in family.generate_family_f(max_n):
        coloring = matchings.proper_3_edge_coloring(member.graph)
        for cut in separation.enumerate_matching_cuts(member.graph):
            if len(cut.cut) != 3:
                continue
            colors = sorted(coloring.color_of[edge] for edge in cut.cut)
            assert colors == [1, 2, 3]
