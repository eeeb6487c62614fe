import json

import numpy as np
import pytest

from rindlerqq.cli import main


def run_cli(*argv):
    return main(list(argv))


def read_bytes(path):
    with open(path, "rb") as fh:
        return fh.read()


def test_sweep_preset_outputs(tmp_path):
    out = tmp_path / "fig2"
    assert run_cli("sweep", "fig2", "--points", "9", "--out", str(out)) == 0
    csv = (out / "fig2.csv").read_text()
    lines = csv.strip().split("\n")
    assert lines[0] == "r,E_qubit,E_qutrit,E_both"
    assert len(lines) == 10
    first = [float(x) for x in lines[1].split(",")]
    assert first[0] == 0.0
    # r = 0 channels are isometric embeddings: all columns equal at the start
    assert abs(first[1] - first[2]) < 1e-10 and abs(first[1] - first[3]) < 1e-10
    assert abs(first[1] - 0.5) < 1e-10
    meta = json.loads((out / "fig2.meta.json").read_text())
    assert meta["family"] == {"kind": "one-parameter", "p": 0.5}
    assert meta["initial_state"]["physical"] is True
    assert (out / "fig2.png").stat().st_size > 0


def test_sweep_two_point_grid(tmp_path):
    assert run_cli("sweep", "fig1b", "--points", "2", "--out", str(tmp_path)) == 0
    lines = (tmp_path / "fig1b.csv").read_text().strip().split("\n")
    assert len(lines) == 3
    rs = [float(line.split(",")[0]) for line in lines[1:]]
    assert rs[0] == 0.0
    assert abs(rs[1] - np.pi / 4) < 1e-15


def test_sweep_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run_cli("sweep", "fig1a", "--points", "6", "--out", str(out)) == 0
    for name in ("fig1a.csv", "fig1a.meta.json", "fig1a.png"):
        assert read_bytes(a / name) == read_bytes(b / name), name


def test_sweep_unphysical_family_requires_flag(tmp_path):
    code = run_cli("sweep", "--family", "example-one", "--s3", "1", "--t3", "1",
                   "--points", "4", "--out", str(tmp_path))
    assert code == 1
    code = run_cli("sweep", "--family", "example-one", "--s3", "1", "--t3", "1",
                   "--points", "4", "--out", str(tmp_path), "--allow-unphysical")
    assert code == 0
    meta = json.loads((tmp_path / "sweep.meta.json").read_text())
    assert meta["initial_state"]["physical"] is False
    assert any("unphysical" in w for w in meta["warnings"])


def test_fig1a_preset_carries_warning(tmp_path):
    assert run_cli("sweep", "fig1a", "--points", "4", "--out", str(tmp_path)) == 0
    meta = json.loads((tmp_path / "fig1a.meta.json").read_text())
    assert meta["allow_unphysical"] is True
    assert meta["warnings"]


def test_fig3_preset_documents_substitution(tmp_path):
    assert run_cli("sweep", "fig3", "--points", "4", "--out", str(tmp_path)) == 0
    meta = json.loads((tmp_path / "fig3.meta.json").read_text())
    assert meta["family"] == {"kind": "two-parameter", "alpha": 0.0, "gamma": 1.0,
                              "beta": 0.0}
    assert meta["substitutions"]
    assert abs(meta["initial_state"]["negativity"] - 1.0) < 1e-10


def test_sweep_mode_subset_and_grid2d(tmp_path):
    assert run_cli("sweep", "fig2", "--mode", "qubit", "--points", "4",
                   "--out", str(tmp_path), "--name", "q") == 0
    lines = (tmp_path / "q.csv").read_text().strip().split("\n")
    assert lines[0] == "r,E_qubit"
    assert run_cli("sweep", "fig2", "--grid2d", "--points", "5",
                   "--out", str(tmp_path), "--name", "g2") == 0
    lines = (tmp_path / "g2.csv").read_text().strip().split("\n")
    assert lines[0] == "r_q,r_t,E_both"
    assert len(lines) == 26


def test_check_anchors_pass(tmp_path):
    assert run_cli("check", "APPENDIX_A", "EQ7", "--trials", "5", "--seed", "42",
                   "--out", str(tmp_path)) == 0
    report = json.loads((tmp_path / "check_APPENDIX_A.json").read_text())
    assert report["elements_flagged"] == 0
    assert report["max_abs_diff"] <= 1e-12


def test_check_informational_table_exits_zero(tmp_path):
    assert run_cli("check", "EQ10", "--trials", "3", "--seed", "1",
                   "--out", str(tmp_path)) == 0
    report = json.loads((tmp_path / "check_EQ10.json").read_text())
    assert report["elements_flagged"] > 0


def test_check_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run_cli("check", "EQ7", "EQ11B", "--trials", "4", "--seed", "42",
                       "--out", str(out)) == 0
    for name in ("check_EQ7.json", "check_EQ11B.json"):
        assert read_bytes(a / name) == read_bytes(b / name)


def test_check_requires_seed_and_known_table(tmp_path):
    assert run_cli("check", "EQ7", "--out", str(tmp_path)) == 2  # missing --seed
    assert run_cli("check", "EQXX", "--seed", "1", "--out", str(tmp_path)) == 2


def test_inspect_pure_family(capsys):
    assert run_cli("inspect", "--family", "one-parameter", "--p", "0") == 0
    out = capsys.readouterr().out
    assert "negativity      : 1.000000000000" in out
    assert "physical        : True" in out


def test_inspect_accelerated_shape(capsys):
    code = run_cli("inspect", "--family", "example-one", "--s3", "1", "--t3", "1",
                   "--mode", "both", "--rq", "0.5", "--rt", "0.5")
    out = capsys.readouterr().out
    assert code == 1  # the initial state is unphysical: report + nonzero exit
    assert "1P" in out and "0U" in out  # 8x8 matrix with pair-basis labels
    assert "physical        : False" in out


def test_inspect_rejects_invalid_two_parameter(capsys):
    code = run_cli("inspect", "--family", "two-parameter", "--alpha", "0.5",
                   "--gamma", "-1.5")
    out = capsys.readouterr().out
    assert code == 1
    assert "(beta+gamma)/2" in out


def test_usage_errors_exit_two(tmp_path):
    assert run_cli("sweep", "--points", "4", "--out", str(tmp_path)) == 2  # no family
    assert run_cli("nonsense") == 2
    assert run_cli("sweep", "fig2", "--points", "1", "--out", str(tmp_path)) == 2
    assert run_cli("inspect", "--family", "one-parameter", "--p", "0",
                   "--mode", "qubit") == 2  # missing --rq
