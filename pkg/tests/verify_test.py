import json
import sys

import pytest

from sepmatch import reports, theorems, verify


@pytest.mark.parametrize(
    "theorem_id, max_n, checked",
    [
        ("thm1", 5, 19),
        ("thm-moshi", 8, 8),
        ("thm3", 10, 1),
        ("thm6", 8, 2),
        ("conj-funk", 10, 4),
    ],
)
def test_run_verify(theorem_id, max_n, checked):
    report = verify.run_verify(theorem_id, max_n)
    assert report.status == reports.VERIFIED
    assert report.graphs_checked == checked
    assert report.theorem_id == theorem_id


def test_run_verify_counts():
    report = verify.run_verify("thm1", 5)
    assert report.counts == {
        "decomposable": 14,
        "exceptional_0": 1,
        "exceptional_1": 1,
        "exceptional_2": 1,
        "exceptional_3": 1,
        "exceptional_5": 1,
    }


def test_multigraph_scan():
    report = verify.run_verify("thm-multi", 6)
    assert report.status == reports.VERIFIED
    assert report.counts["nondecomposable"] == 3


def test_bridgeless_bound():
    report = verify.run_verify("thm4", 10)
    assert report.status == reports.VERIFIED
    assert report.counts["nondecomposable"] == 2


def test_family_bound():
    report = verify.run_verify("thm5", 14)
    assert report.status == reports.VERIFIED
    assert report.counts["F0"] == 1
    assert report.counts["heawood"] == 1
    values = {
        record["exceptional"]: record["mms"] for record in report.records
    }
    assert values == {"F0": 0, "F1": 3, "F2": 5}


def test_oracle():
    report = verify.run_verify("oracle", 6, seed=5)
    assert report.status == reports.VERIFIED
    assert report.class_scanned["seed"] == 5


def test_workers_agree():
    single = verify.run_verify("thm-moshi", 10)
    pooled = verify.run_verify("thm-moshi", 10, workers=2)
    assert pooled.graphs_checked == single.graphs_checked
    assert pooled.counts == single.counts


@pytest.mark.slow
@pytest.mark.parametrize("theorem_id", theorems.THEOREM_IDS)
def test_full_scan(theorem_id):
    assert verify.run_verify(theorem_id, workers=2).status == (
        reports.VERIFIED
    )


def test_run_verify_errors():
    with pytest.raises(verify.Error):
        verify.run_verify("thm1", 5, workers=0)
    with pytest.raises(theorems.Error):
        verify.run_verify("thm-moshi", 16)
    with pytest.raises(NotImplementedError):
        verify.run_verify("thm7")


def _main(monkeypatch, *argv):
    monkeypatch.setattr(sys, "argv", ["sepmatch-verify", *argv])
    with pytest.raises(SystemExit) as status:
        verify.main()
    return status.value.code


def test_main_verified(monkeypatch, capsys):
    code = _main(
        monkeypatch, "--theorem", "thm-moshi", "--max_n", "6", "--no_progress"
    )
    assert code == verify.EXIT_VERIFIED
    document = json.loads(capsys.readouterr().out)
    assert document["status"] == reports.VERIFIED
    assert document["graphs_checked"] == 3


def test_main_writes_report(monkeypatch, tmp_path):
    path = tmp_path / "moshi.json"
    code = _main(
        monkeypatch,
        "--theorem",
        "thm-moshi",
        "--max_n",
        "6",
        "--out",
        str(path),
        "--no_progress",
    )
    assert code == verify.EXIT_VERIFIED
    assert json.loads(path.read_text())["theorem_id"] == "thm-moshi"


@pytest.mark.parametrize(
    "argv",
    [
        ("--theorem", "thm99"),
        ("--theorem", "thm-moshi", "--max_n", "16"),
        ("--theorem", "thm-moshi", "--workers", "0"),
    ],
)
def test_main_precondition(monkeypatch, argv):
    assert _main(monkeypatch, *argv) == verify.EXIT_PRECONDITION


def test_main_violation(monkeypatch, capsys):
    monkeypatch.setattr(
        theorems.CubicTheorem,
        "check",
        lambda self, graph: reports.CheckItem.single(graph, ok=False),
    )
    code = _main(
        monkeypatch, "--theorem", "thm-moshi", "--max_n", "4", "--no_progress"
    )
    assert code == verify.EXIT_VIOLATION
    document = json.loads(capsys.readouterr().out)
    assert document["status"] == reports.FAILED
    assert document["failures"][0]["graph6"] == "C~"
