import json

import pytest

from conftest import asset_path
from eqkl.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_vamos_text(capsys):
    code, out, err = run_cli(
        capsys, "compute", "--poly", "P", "--matroid", "vamos",
        "--group", asset_path("vamos_w.json"),
        "--table", asset_path("d4xd4.json"))
    assert code == 0
    assert "dimensions: 1 33" in out
    assert "orbit" in err  # progress goes to stderr only


def test_compute_uniform_inline_trivial(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--poly", "Z",
        "--matroid", '{"type":"uniform","k":1,"n":3}', "--group", "trivial")
    assert code == 0
    assert "dimensions: 1 1" in out


def test_compute_json_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--poly", "P", "--matroid", "vamos",
        "--group", asset_path("vamos_w.json"),
        "--table", asset_path("d4xd4.json"), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["polynomial"] == "P"
    assert doc["dimensions"] == [1, 33]
    assert doc["method"] == "paving"
    assert len(doc["coefficients"]) == 2
    from eqkl.cli import render_json

    assert render_json(doc) == out  # byte-identical re-rendering


def test_compute_methods_agree(capsys):
    outs = {}
    for method in ("brute", "paving"):
        code, out, _ = run_cli(
            capsys, "compute", "--poly", "P", "--matroid", "vamos",
            "--group", asset_path("vamos_w.json"),
            "--table", asset_path("d4xd4.json"),
            "--method", method, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        outs[method] = (doc["dimensions"], doc["decomposition"])
    assert outs["brute"] == outs["paving"]


def test_compute_threads_flag(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--poly", "P", "--matroid",
        asset_path("s_3_6_22.json"), "--group", asset_path("m22.json"),
        "--table", asset_path("m22_table.json"), "--threads", "2",
        "--format", "json")
    assert code == 0
    assert json.loads(out)["dimensions"] == [1, 55]


def test_compute_usage_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "--poly", "P",
                           "--matroid", "no_such_file.json")
    assert code == 2
    assert "usage" in err
    code, _, _ = run_cli(capsys, "compute", "--poly", "W",
                         "--matroid", "vamos")
    assert code == 2


def test_compute_group_mismatch_fails(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--poly", "P", "--matroid", "vamos",
        "--group", asset_path("m11.json"))
    assert code in (1, 2)
    assert err


def test_correction_command(capsys):
    code, out, _ = run_cli(capsys, "correction", "p", "4", "4")
    assert code == 0 and out.strip() == "V[3,1]*t"
    code, out, _ = run_cli(capsys, "correction", "q", "1", "5")
    assert code == 0 and out.strip() == "V[5]"
    code, out, _ = run_cli(capsys, "correction", "z", "1", "7")
    assert code == 0 and out.strip() == "0"


def test_validate_steiner(capsys):
    code, out, _ = run_cli(capsys, "validate", "steiner",
                           asset_path("s_5_8_24.json"))
    assert code == 0
    assert "759 blocks" in out


def test_validate_broken_steiner(tmp_path, capsys):
    obj = json.load(open(asset_path("s_4_5_11.json")))
    obj["blocks"] = obj["blocks"][1:]
    bad = tmp_path / "broken.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run_cli(capsys, "validate", "steiner", str(bad))
    assert code == 1
    assert "FAIL" in out and "no block" in out


def test_validate_table(capsys):
    code, out, _ = run_cli(capsys, "validate", "table",
                           asset_path("m12_table.json"))
    assert code == 0
    assert "row orthonormality" in out


def test_validate_group_blocks(capsys):
    code, out, _ = run_cli(capsys, "validate", "group", asset_path("m24.json"),
                           "--blocks", asset_path("s_5_8_24.json"))
    assert code == 0
    assert "map blocks to blocks" in out


def test_validate_matroid(capsys):
    code, out, _ = run_cli(capsys, "validate", "matroid", "vamos")
    assert code == 0
    assert "65 bases" in out


def test_gedeon_command(capsys):
    code, out, _ = run_cli(
        capsys, "gedeon", "--matroid", "vamos",
        "--group", asset_path("vamos_w.json"),
        "--table", asset_path("d4xd4.json"))
    assert code == 0
    assert "PASS" in out
    code, out, _ = run_cli(
        capsys, "gedeon", "--matroid", asset_path("s_4_7_23.json"),
        "--group", asset_path("m23.json"),
        "--table", asset_path("m23_table.json"))
    assert code == 0
    assert "PASS" in out


def test_gedeon_uniform_is_trivially_honest(capsys):
    code, out, _ = run_cli(
        capsys, "gedeon", "--matroid", '{"type":"uniform","k":2,"n":4}',
        "--group", asset_path("vamos_w.json"))
    assert code == 2  # missing table is a usage error


def test_asset_path_resolution(capsys):
    # spec-style relative asset paths resolve to the packaged data
    code, out, _ = run_cli(capsys, "validate", "steiner", "assets/s_4_5_11.json")
    assert code == 0
