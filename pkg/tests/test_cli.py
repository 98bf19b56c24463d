import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from bottchern import __version__
from bottchern.cli import EXIT_OK, EXIT_PARSE, EXIT_PROPERTY, EXIT_VALIDATION, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_dot(capsys):
    code, out, _ = run(capsys, "analyze", "--input", DATA / "dot.json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["tool"] == "bottchern" and doc["version"] == __version__
    assert doc["config"]["command"] == "analyze"
    assert doc["cohomology"]["derham"]["dims"] == [{"k": 0, "dim": 1}]
    assert all(x["holds"] for x in doc["lemma"]["by_bidegree"])
    assert all(doc["theorem"].values())


def test_analyze_zigzag(capsys):
    code, out, _ = run(capsys, "analyze", "--input", DATA / "zigzag.json")
    doc = json.loads(out)
    assert code == EXIT_OK
    failing = [(x["p"], x["q"]) for x in doc["lemma"]["by_bidegree"] if not x["holds"]]
    assert failing == [(1, 1)]
    assert not any(v for k, v in doc["theorem"].items() if k != "consistent")


def test_analyze_text_and_csv(capsys):
    _, text, _ = run(capsys, "analyze", "--input", DATA / "zigzag.json", "--format", "text")
    assert "fails at (1, 1)" in text
    _, table, _ = run(capsys, "analyze", "--input", DATA / "zigzag.json", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(table)))
    assert {(r["p"], r["q"]): r["bc"] for r in rows}[("1", "1")] == "1"


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--input", DATA / "bad_scalar.json")
    assert code == EXIT_PARSE and "3//4" in err


def test_analyze_validation_error(capsys, tmp_path):
    doc = {
        "spaces": [{"p": 0, "q": 0, "dim": 1}, {"p": 1, "q": 0, "dim": 1}, {"p": 0, "q": 1, "dim": 1}, {"p": 1, "q": 1, "dim": 1}],
        "dprime": [{"p": 0, "q": 0, "matrix": [["1"]]}, {"p": 0, "q": 1, "matrix": [["1"]]}],
        "dsecond": [{"p": 0, "q": 0, "matrix": [["1"]]}, {"p": 1, "q": 0, "matrix": [["1"]]}],
    }
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(capsys, "analyze", "--input", f)
    assert code == EXIT_VALIDATION and "anticommutation" in err


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "analyze", "--input", tmp_path / "missing.json")[0] == EXIT_PARSE
    assert run(capsys, "torus", "--model", DATA / "t2.json", "--mode-box", "-1")[0] == EXIT_PARSE
    assert run(capsys, "torus", "--model", DATA / "t2.json", "--theories", "bc,nope")[0] == EXIT_PARSE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_PARSE


def test_torus_t2(capsys):
    code, out, _ = run(capsys, "torus", "--model", DATA / "t2.json", "--theories", "bc,derham")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["complete"]
    bc = {(x["p"], x["q"]): x["dim"] for x in doc["totals"]["bc"] if x["dim"]}
    assert bc == {(0, 1): 1, (1, 0): 1, (0, -1): 1, (-1, 0): 1}


def test_torus_t4_csv(capsys):
    code, out, _ = run(capsys, "torus", "--model", DATA / "t4.json", "--mode-box", 1, "--format", "csv")
    assert code == EXIT_OK
    rows = out.strip().splitlines()[1:]
    assert rows[0] == "p\\q,-2,-1,0,1,2"
    assert rows[3] == "0,1,,4,,1"
    assert rows[1] == "2,,,1,,"


def test_torus_text(capsys):
    _, out, _ = run(capsys, "torus", "--model", DATA / "t2.json", "--mode-box", 1, "--format", "text")
    assert "nonzero modes contributing: 0" in out


def test_torus_invalid_model(capsys):
    code, _, err = run(capsys, "torus", "--model", DATA / "t2_invalid.json")
    assert code == EXIT_VALIDATION and "J1^2 = -I" in err


def test_repeated_runs_are_byte_identical(tmp_path):
    out = tmp_path / "r.json"
    texts = []
    for workers in ("1", "2"):
        assert main(["torus", "--model", str(DATA / "t2.json"), "--mode-box", "1", "--output", str(out), "--workers", workers]) == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "core", "--seed", 1, "--count", 5)
    doc = json.loads(out)
    assert code == EXIT_OK and doc["ok"] and doc["config"]["suite"] == "core"
    assert "inject_fault" not in doc["config"] or doc["config"]["inject_fault"] is False


def test_verify_with_fault(capsys):
    code, out, err = run(capsys, "verify", "--suite", "core", "--count", 2, "--inject-fault", "--format", "text")
    assert code == EXIT_VALIDATION
    assert "validation failure" in err and out.startswith("bottchern")


def test_property_exit_code(monkeypatch, capsys):
    from bottchern import cli
    from bottchern.verify import SuiteResult

    def failing(*a, **k):
        res = SuiteResult("core", 0, 1)
        res.record("demo", False, "instance")
        return res

    monkeypatch.setattr(cli, "run_suite", failing)
    assert run(capsys, "verify", "--suite", "core", "--count", 1)[0] == EXIT_PROPERTY


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "bottchern.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout
