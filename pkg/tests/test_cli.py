from __future__ import annotations

import json

import pytest

from conftest import code72_descriptor, alpha32_descriptor
from dtsldpc import io
from dtsldpc.cli import main

EX312 = ["--n", "3", "--k", "2", "--p", "13", "--sets", "1,2,6;1,2,4", "--variant", "alpha"]
CODE72 = ["--n", "7", "--k", "2", "--p", "23", "--sets", "1,2,5,9;1,2,4,10", "--variant", "alpha"]
CYCLEFREE = ["--n", "7", "--k", "2", "--p", "7", "--sets", "1,2,5;1,3,9", "--variant", "alpha"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def alpha32_file(tmp_path):
    path = tmp_path / "alpha32.json"
    path.write_text(io.dump_descriptor(alpha32_descriptor()))
    return str(path)


def test_construct_writes_golden(tmp_path, alpha32_file, golden, capsys):
    out = tmp_path / "out"
    code, _, _ = run(capsys, "construct", "--descriptor", alpha32_file, "--out", str(out))
    assert code == 0
    assert (out / "base.txt").read_text() == golden("alpha32_base.txt")
    assert (out / "window.txt").read_text() == golden("alpha32_window.txt")
    assert (out / "H5.txt").read_text() == "a^6 0 0\n"
    # round trip: re-ingesting the written descriptor reproduces the hash
    again = io.load_descriptor(out / "descriptor.json")
    assert io.descriptor_hash(again) == io.descriptor_hash(alpha32_descriptor())
    assert json.loads((out / "descriptor.json").read_text())["hash"] == io.descriptor_hash(again)


def test_construct_code72(tmp_path, golden, capsys):
    out = tmp_path / "o"
    assert run(capsys, "construct", *CODE72, "--mode", "relaxed", "--d", "5", "--out", str(out))[0] == 0
    assert (out / "window.txt").read_text() == golden("code72_window.txt")


def test_construct_rejects_bad_descriptor(capsys):
    code, _, err = run(capsys, "construct", "--n", "2", "--k", "3", "--p", "2", "--sets", "1,2;1,3;1,4")
    assert code != 0
    assert "n > k required" in err


def test_construct_missing_params(capsys):
    code, _, err = run(capsys, "construct", "--n", "3")
    assert code != 0 and "--k" in err


def test_construct_bad_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "construct", "--descriptor", str(bad))
    assert code != 0 and "descriptor" in err
    bad.write_text('{"n": 3}')
    code, _, err = run(capsys, "construct", "--descriptor", str(bad))
    assert code != 0 and "lacks" in err


def test_analyze(capsys, alpha32_file):
    code, out, _ = run(capsys, "analyze", "--descriptor", alpha32_file)
    rep = json.loads(out)
    assert [c["value"] for c in rep["column_distances"]] == [2, 3, 3, 3, 3, 4]
    assert rep["free_distance"] == {**rep["free_distance"], "value": 4, "status": "exact"}


def test_analyze_cyclefree_delta(capsys):
    rep = json.loads(run(capsys, "analyze", *CYCLEFREE)[1])
    assert rep["delta"] == 1 and rep["reduced"]


def test_analyze_mu_zero(capsys):
    rep = json.loads(run(capsys, "analyze", "--n", "5", "--k", "2", "--p", "7", "--sets", "1,2;1,3")[1])
    assert rep["mu"] == 0 and rep["delta"] == 0


def test_cycles(capsys):
    rep = json.loads(run(capsys, "cycles", *CYCLEFREE)[1])
    assert rep["girth"] == "infinity" and rep["by_length"] == {}
    rep = json.loads(run(capsys, "cycles", *CODE72, "--lmax", "4")[1])
    assert all(v["frc_violations"] == 0 for v in rep["by_length"].values())
    assert set(rep["by_length"]) == {"2", "4"}


def test_cycles_audit_text(capsys):
    code, out, _ = run(capsys, "cycles", *EX312, "--lmax", "2", "--format", "text")
    assert code == 0 and out.startswith("window 6x18, girth 4")


def test_bounds(capsys):
    rep = json.loads(run(capsys, "bounds", *CODE72)[1])
    by = {e["theorem"]: e for e in rep["entries"]}
    assert by["minors_2x2"]["threshold"] == 11
    assert by["six_cycles"]["threshold"] == 19 and by["six_cycles"]["satisfied"]


def test_search_dts(capsys):
    code, out, _ = run(capsys, "search-dts", "--k", "1", "--w", "3", "--mode", "weak")
    assert json.loads(out)["sets"] == [[1, 2, 4]]
    code, out, _ = run(capsys, "search-dts", "--k", "2", "--w", "3", "--mode", "strict", "--format", "text")
    assert out == "{{1,2,5}, {1,3,8}} scope 8\n"
    code, _, err = run(capsys, "search-dts", "--k", "2", "--w", "3", "--mode", "strict", "--scope-cap", "5")
    assert code != 0 and "scope" in err


def test_export_alist(tmp_path, golden, capsys):
    out = tmp_path / "m.alist"
    argv = ["export", "--n", "3", "--k", "1", "--p", "2", "--sets", "1,2,3", "--out", str(out)]
    assert run(capsys, *argv)[0] == 0
    assert out.read_text() == golden("binary31.alist")
    assert (tmp_path / "m.alist.values").read_text() == "0 0\n0 0\n0 0 0\n0 0\n"
    code, text, _ = run(capsys, "export", *CODE72, "--format", "alist")
    assert text.splitlines()[0] == "14 10"
    code, text, _ = run(capsys, "export", *CODE72, "--j", "2")
    assert text.splitlines()[0] == "21 15"


def test_alist_format_only_for_export(capsys):
    with pytest.raises(SystemExit):
        main(["analyze", *EX312, "--format", "alist"])


def test_seeded_runs_are_deterministic(tmp_path, capsys):
    argv = ["construct", "--n", "4", "--k", "2", "--p", "13", "--sets", "1,2,5;1,3,4", "--random-values", "--format", "json"]
    first = run(capsys, *argv, "--seed", "5")[1]
    assert first == run(capsys, *argv, "--seed", "5")[1]
    assert first != run(capsys, *argv, "--seed", "6")[1]


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("DTSLDPC_BUDGET", "2")
    rep = json.loads(run(capsys, "analyze", *EX312)[1])
    assert rep["free_distance"]["status"] == "budget-exceeded"
    rep = json.loads(run(capsys, "analyze", *EX312, "--budget", "100000")[1])
    assert rep["free_distance"]["status"] == "exact"


def test_console_script_entry_point():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-m", "dtsldpc.cli", "search-dts", "--k", "1", "--w", "3", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout == "{{1,2,4}} scope 4\n"
    bad = subprocess.run(
        [sys.executable, "-m", "dtsldpc.cli", "construct", "--n", "2", "--k", "2", "--p", "2", "--sets", "1;2"],
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 2 and "n > k required" in bad.stderr
