import json
import subprocess
import sys

import pytest

from qrea.cli import main, parse_report


def run_cli(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    return code, json.loads(out.read_text())


def test_verify_algebra_n2(tmp_path):
    code, doc = run_cli(["verify-algebra", "--n", "2"], tmp_path)
    assert code == 0
    assert doc["pass"] is True
    assert doc["tool_version"]


def test_classify_roots(tmp_path):
    code, doc = run_cli(["classify-roots", "--q", "0.5", "--roots", "1,0.25,0"], tmp_path)
    assert code == 0
    e = doc["inputs"]["extsig"]
    assert (e["rmod1"], e["nplus"], e["nminus"], e["nzero"]) == (0.0, 2, 0, 1)


def test_classify_roots_inadmissible(tmp_path):
    code, doc = run_cli(["classify-roots", "--roots", "1,1,0"], tmp_path)
    assert code == 1
    assert doc["pass"] is False


def test_rep_build_then_verify(tmp_path):
    code = main(["rep-build", "--n", "2", "--eps", "+,-", "--r", "0.3,0.8",
                 "--depth", "12", "--out", str(tmp_path / "rep.json")])
    assert code == 0
    doc = json.loads((tmp_path / "rep.json").read_text())
    assert doc["spec"]["N"] == 2

    code, rpt = run_cli(["rep-verify", "--n", "2", "--eps", "+,-", "--r", "0.3,0.8",
                         "--depth", "20", "--margin", "8"], tmp_path)
    assert code == 0
    assert rpt["pass"]
    assert rpt["inputs"]["extsig"]["rmod1"] == pytest.approx(0.5)


def test_transport_vector(tmp_path):
    code, doc = run_cli(["transport", "--by", "vector", "--n", "2", "--eps", "+,-",
                         "--r", "0.3,0.8", "--depth", "14", "--margin", "6"], tmp_path)
    assert code == 0
    assert doc["pass"]
    assert doc["inputs"]["components"] >= 2


def test_characters_cmd(tmp_path):
    code, doc = run_cli(["characters", "--n", "3", "--samples", "1", "--seed", "5"], tmp_path)
    assert code == 0
    assert doc["pass"]


def test_sweep_deterministic(tmp_path):
    code1, doc1 = run_cli(["sweep", "--n", "2", "--cells", "12", "--seed", "7",
                           "--depth", "6"], tmp_path, "a.json")
    code2, doc2 = run_cli(["sweep", "--n", "2", "--cells", "12", "--seed", "7",
                           "--depth", "6"], tmp_path, "b.json")
    assert code1 == code2 == 0
    assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()
    assert doc1["inputs"]["adapted_cells"] >= 1


def test_report_schema_roundtrip(tmp_path):
    code, doc = run_cli(["verify-algebra", "--n", "2"], tmp_path)
    text = (tmp_path / "out.json").read_text()
    parsed = parse_report(text)
    assert parsed == doc
    assert parsed["pass"] == (code == 0)


def test_usage_error():
    assert main(["classify-roots"]) == 2
    assert main(["transport", "--by", "bogus", "--n", "2", "--eps", "+,-",
                 "--r", "0.3,0.8"]) == 2


def test_module_entrypoint(tmp_path):
    out = tmp_path / "r.json"
    proc = subprocess.run(
        [sys.executable, "-m", "qrea.cli", "classify-roots", "--roots", "1,0.25",
         "--out", str(out)],
        capture_output=True, text=True, cwd="/root/pkg",
    )
    assert proc.returncode == 0
    assert json.loads(out.read_text())["pass"]


def test_sweep_worker_pool(tmp_path):
    code1, doc1 = run_cli(["sweep", "--n", "2", "--cells", "8", "--seed", "3",
                           "--depth", "5", "--jobs", "2"], tmp_path, "p.json")
    code2, doc2 = run_cli(["sweep", "--n", "2", "--cells", "8", "--seed", "3",
                           "--depth", "5"], tmp_path, "s.json")
    assert code1 == code2 == 0
    assert (tmp_path / "p.json").read_text() == (tmp_path / "s.json").read_text()
