import json

import pytest

from hilbertalg import canonical_form, validate_hilbert
from hilbertalg.cli import main
from hilbertalg.files import dump_algebra, load_algebra_file


@pytest.fixture()
def godel3_file(tmp_path, godel3):
    path = tmp_path / "godel3.json"
    path.write_text(dump_algebra(godel3, labels=["0", "a", "1"]))
    return str(path)


@pytest.fixture()
def tarski3_file(tmp_path, tarski3):
    path = tmp_path / "tarski3.json"
    path.write_text(dump_algebra(tarski3, labels=["a", "b", "1"]))
    return str(path)


def test_validate_ok(godel3_file, capsys):
    assert main(["validate", godel3_file]) == 0
    assert "valid Hilbert algebra" in capsys.readouterr().out


def test_validate_axiom_failure(tmp_path, capsys):
    path = tmp_path / "broken.txt"
    path.write_text("3 2\n2 2 2\n1 2 2\n0 1 2\n")
    assert main(["validate", str(path)]) == 1
    out = capsys.readouterr().out
    assert "exchange: (x1, x1, x0)" in out


def test_validate_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"size": 2, "one": 1, "table": [[9, 1], [0, 1]]}')
    assert main(["validate", str(path)]) == 2
    path.write_text("not json at all {{{")
    assert main(["validate", str(path)]) == 2
    assert main(["validate", str(tmp_path / "missing.json")]) == 2


def test_analyze_fixture(tarski3_file, capsys):
    assert main(["analyze", tarski3_file, "--ce", "--filters"]) == 0
    out = capsys.readouterr().out
    assert "closure endomorphisms (4)" in out
    assert "filters (4)" in out
    assert "monomial=True" in out


def test_analyze_json(godel3_file, capsys):
    assert main(["analyze", godel3_file, "--filters", "--multipliers",
                 "--adjoint", "--extension", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["filters"]) == 3
    assert len(doc["multipliers"]) == 4
    assert sum(m["isotone"] for m in doc["multipliers"]) == 3
    assert len(doc["extension"]["filters"]) == 3


def test_analyze_singleton_all_flags(tmp_path, singleton, capsys):
    path = tmp_path / "one.json"
    path.write_text(dump_algebra(singleton))
    assert main(["analyze", str(path), "--filters", "--multipliers", "--ce",
                 "--adjoint", "--extension"]) == 0
    out = capsys.readouterr().out
    assert "filters (1)" in out and "closure endomorphisms (1)" in out


def test_export_dot(godel3_file, tarski3_file, capsys, tmp_path):
    assert main(["export", godel3_file, "--dot", "hasse"]) == 0
    out = capsys.readouterr().out
    assert out.count("->") == 2
    assert main(["export", tarski3_file, "--dot", "ce"]) == 0
    out = capsys.readouterr().out
    assert out.count("->") == 4  # diamond
    target = tmp_path / "out.dot"
    assert main(["export", godel3_file, "--dot", "filters", "--out", str(target)]) == 0
    assert target.read_text().count("->") == 2


def test_verify_single_file(godel3_file, capsys):
    assert main(["verify", godel3_file, "--suite", "kernel-embedding"]) == 0
    out = capsys.readouterr().out
    assert "RESULT: PASS" in out
    assert "[FAIL]" not in out


def test_verify_unknown_suite(godel3_file, capsys):
    assert main(["verify", godel3_file, "--suite", "nope"]) == 2


def test_verify_enumerate_three(capsys):
    assert main(["verify", "--enumerate", "3", "--suite", "all"]) == 0
    out = capsys.readouterr().out
    assert "enumerated 2 algebra(s) of size 3" in out
    assert "RESULT: PASS" in out


def test_verify_enumerate_one_trivial(capsys):
    assert main(["verify", "--enumerate", "1"]) == 0
    assert "RESULT: PASS" in capsys.readouterr().out


def test_verify_json_mode(capsys):
    assert main(["verify", "--enumerate", "2", "--suite", "all", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert doc["counts"]["fail"] == 0
    assert len(doc["algebras"]) == 1
    assert doc["cross_survey"]["ok"] is True


def test_verify_implication_only_suites_skip(godel3_file, capsys):
    assert main(["verify", godel3_file, "--suite", "implication-extras"]) == 0
    out = capsys.readouterr().out
    assert "[SKIP] precondition (applies to implication algebras only)" in out


def test_enumerate_summary(capsys):
    assert main(["enumerate", "3"]) == 0
    out = capsys.readouterr().out
    assert "2 algebra(s) up to isomorphism" in out
    assert "3 raw table(s)" in out


def test_enumerate_bound(capsys):
    assert main(["enumerate", "7"]) == 2
    assert main(["enumerate", "5", "--bound", "4"]) == 2


def test_enumerate_export_roundtrip(tmp_path, capsys):
    out_dir = tmp_path / "catalog"
    assert main(["enumerate", "3", "--out-dir", str(out_dir)]) == 0
    files = sorted(out_dir.glob("algebra_3_*.json"))
    assert len(files) == 2
    assert (out_dir / "summary_3.txt").exists()
    for path in files:
        table, one, _ = load_algebra_file(str(path))
        alg = validate_hilbert(table, one)
        assert canonical_form(alg) == alg.imp  # exports re-canonicalize to themselves


def test_verify_deterministic_output(capsys):
    assert main(["verify", "--enumerate", "3", "--suite", "all", "--jobs", "1"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--enumerate", "3", "--suite", "all", "--jobs", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_verify_timings_are_opt_in(godel3_file, capsys):
    assert main(["verify", godel3_file, "--suite", "join-density"]) == 0
    plain = capsys.readouterr().out
    assert not any(line.rstrip().endswith("s") and "[" in line for line in plain.splitlines() if "PASS" in line)
    assert main(["verify", godel3_file, "--suite", "join-density", "--timings"]) == 0
    timed = capsys.readouterr().out
    assert any(line.rstrip().endswith("s") for line in timed.splitlines() if "[PASS]" in line)
    assert main(["verify", godel3_file, "--suite", "join-density", "--json", "--timings"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "elapsed" in doc["algebras"][0]["suites"][0]["checks"][0]
