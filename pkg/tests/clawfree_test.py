import pytest

from sepmatch import clawfree, generators, named, reports, separation


def test_k4_decomposition():
    decomposition = clawfree.diamond_decomposition(named.k4())
    assert decomposition.kind == clawfree.K4
    assert decomposition.pieces == []


def test_prism_decomposition(prism):
    decomposition = clawfree.diamond_decomposition(prism)
    assert decomposition.kind == clawfree.TRIANGLE_STRING_STRUCTURE
    assert decomposition.triangles == ((0, 1, 2), (3, 4, 5))
    assert decomposition.diamonds == ()
    assert decomposition.connectors == {(0, 3), (1, 4), (2, 5)}


def test_ring_decomposition():
    graph = named.diamond_ring(3)
    decomposition = clawfree.diamond_decomposition(graph)
    assert decomposition.kind == clawfree.RING_OF_DIAMONDS
    assert [diamond.central for diamond in decomposition.diamonds] == [
        (1, 2),
        (5, 6),
        (9, 10),
    ]
    assert decomposition.connectors == {(3, 4), (7, 8), (0, 11)}
    assert decomposition.edges() == graph.edges
    document = decomposition.to_json()
    assert document["diamonds"][0] == {"central": [1, 2], "ends": [0, 3]}


def test_claw_error():
    with pytest.raises(clawfree.ClawError) as error:
        clawfree.diamond_decomposition(named.k33())
    center, leaves = error.value.witness
    assert center == 0
    assert leaves == (3, 4, 5)


def test_bridge_error():
    with pytest.raises(clawfree.BridgeError) as error:
        clawfree.diamond_decomposition(named.bridged_k4_pair())
    assert error.value.witness == (4, 9)


def test_not_cubic_error():
    with pytest.raises(clawfree.NotCubicError) as error:
        clawfree.diamond_decomposition(named.cycle(4))
    assert error.value.witness == 0


def test_errors_share_a_base():
    assert issubclass(clawfree.ClawError, clawfree.Error)
    assert issubclass(clawfree.BridgeError, clawfree.Error)
    assert issubclass(clawfree.NotCubicError, clawfree.Error)


@pytest.mark.parametrize(
    "graph",
    [
        named.prism(),
        named.diamond_ring(2),
        named.diamond_ring(4),
        generators.truncate(named.k4()),
        generators.insert_diamond_string(named.prism(), (0, 3), 2),
    ],
)
def test_disconnecting_pm(graph):
    matching = clawfree.disconnecting_pm_clawfree(graph)
    matching.validate(graph)
    assert matching.is_perfect(graph)
    assert separation.is_separating(graph, matching)


def test_k4_has_no_disconnecting_pm():
    with pytest.raises(clawfree.Error, match="K4"):
        clawfree.disconnecting_pm_clawfree(named.k4())


def test_pm_rejects_claws():
    with pytest.raises(clawfree.ClawError):
        clawfree.disconnecting_pm_clawfree(named.cube())


@pytest.mark.parametrize("seed", range(200))
def test_random_clawfree(seed):
    graph = generators.random_clawfree_cubic(4 + 2 * (seed % 3), seed)
    matching = clawfree.disconnecting_pm_clawfree(graph)
    assert matching.is_perfect(graph)
    assert separation.is_separating(graph, matching)


def test_clawfree_check(prism):
    item = clawfree.clawfree_check(prism)
    assert item.ok
    assert item.checked == 1
    assert item.counts == {clawfree.TRIANGLE_STRING_STRUCTURE: 1}


def test_clawfree_check_reports_claw():
    item = clawfree.clawfree_check(named.k33())
    assert not item.ok
    assert item.checked == 1
    assert item.counts == {"ClawError": 1}


def test_clawfree_check_skips_k4():
    item = clawfree.clawfree_check(named.k4())
    assert item.checked == 0
    assert item.counts == {clawfree.K4: 1}


def test_verify_clawfree_theorem():
    report = clawfree.verify_clawfree_theorem(10)
    assert report.theorem_id == "thm6"
    assert report.status == reports.VERIFIED
    assert report.counts[clawfree.K4] == 1
    assert report.counts[clawfree.RING_OF_DIAMONDS] == 1


@pytest.mark.slow
def test_verify_clawfree_theorem_14():
    assert clawfree.verify_clawfree_theorem(14).status == reports.VERIFIED


def test_certificate_json(prism):
    document = clawfree.certificate_json(prism)
    assert document["kind"] == clawfree.TRIANGLE_STRING_STRUCTURE
    assert document["certificate"]["edges"] == [[0, 3], [1, 4], [2, 5]]
