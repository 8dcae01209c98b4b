import json
import subprocess
import sys

import pytest

from heckeann.cli import f12_report, run

from published_values import COUNTEREXAMPLE_R, F12_MATRIX


def run_json(*argv):
    code, out = run(list(argv))
    return code, json.loads(out)


def test_closed_annihilator_has_ten_generators():
    code, data = run_json("ann", "--n", "4", "--lambda", "2,2", "--method", "closed")
    assert code == 0
    assert data["closed_rank"] == 10 and len(data["generators"]) == 10
    assert data["verdict"] == "pass"


def test_gf2_kernel_has_rank_eleven():
    code, data = run_json("ann", "--n", "4", "--lambda", "2,2", "--method", "kernel", "--ring", "gfp:p=2,v=1")
    assert code == 0
    assert data["kernel_rank"] == 11 and data["semisimple_rank"] == 10


def test_both_methods_report_specializations():
    code, data = run_json("ann", "--n", "3", "--lambda", "2,1", "--method", "both")
    assert code == 0
    assert data["containment"] and data["equality"] and data["closed_rank"] == data["kernel_rank"] == 1


def test_verify_all_small():
    code, data = run_json("verify", "--suite", "all", "--max-n", "3")
    assert code == 0
    assert data["verdict"] == "pass"


def test_example_seven_text():
    code, out = run(["example", "--which", "seven", "--format", "text"])
    assert code == 0
    assert "x♯_{cc} = (1) - (12) - (14) - (24) + (124) + (142)" in out


def test_example_seven_json():
    code, data = run_json("example", "--which", "seven")
    assert code == 0
    assert data["membership_of_r"] is False and data["r_annihilates"] is True
    assert data["dim_char0"] == 10 and data["dim_char2"] == 11
    assert data["r"].replace(" ", "") == COUNTEREXAMPLE_R


def test_example_f12():
    code, data = run_json("example", "--which", "f12")
    assert code == 0
    assert tuple(map(tuple, data["matrix"])) == F12_MATRIX
    assert data["matches_printed"] and (data["rank_q"], data["rank_gf2"], data["rank_qv"]) == (4, 3, 4)
    assert f12_report()["matrix"] == data["matrix"]


@pytest.mark.parametrize("argv", [
    ["ann", "--n", "4", "--lambda", "2,2", "--ring", "gfp:p=4"],
    ["ann", "--n", "4", "--lambda", "2,1"],
    ["ann", "--n", "4", "--lambda", "x"],
    ["element", "--n", "3", "--s", "1,2/4", "--t", "1,2/3"],
    ["ann", "--n", "7", "--lambda", "4,3", "--method", "kernel"],
    ["verify", "--max-n", "6"],
    ["basis", "--n", "0"],
    ["nosuchverb"],
])
def test_usage_errors_exit_two(argv):
    code, _ = run(argv)
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["basis", "--n", "3"],
    ["ann", "--n", "4", "--lambda", "2,2", "--method", "closed"],
    ["example", "--which", "seven"],
    ["tensor", "--n", "2", "--op", "E1"],
])
def test_output_is_byte_stable(argv):
    assert run(argv) == run(argv)


@pytest.mark.parametrize("argv", [
    ["ann", "--n", "4", "--lambda", "2,2", "--method", "closed"],
    ["verify", "--suite", "hecke", "--max-n", "3"],
    ["example", "--which", "seven"],
    ["example", "--which", "f12"],
])
def test_verification_json_fields(argv):
    _, data = run_json(*argv)
    assert {"ring", "n", "lambda", "verdict"} <= set(data)


def test_tensor_and_element_verbs():
    code, data = run_json("tensor", "--n", "2", "--op", "E1")
    assert code == 0 and data["shape"] == [4, 4] and data["rank"] == 2
    code, data = run_json("element", "--n", "3", "--perm", "(12)")
    assert code == 0 and data["element"]["terms"][0]["perm"] == [2, 1, 3]
    code, data = run_json("basis", "--n", "3")
    assert code == 0 and data["determinant"] == {"coeffs": ["-1"], "min_exp": 2}


def test_plot_dir(tmp_path):
    assert run(["ann", "--n", "3", "--lambda", "2,1", "--plot-dir", str(tmp_path)])[0] == 0
    assert run(["example", "--which", "f12", "--plot-dir", str(tmp_path)])[0] == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert "f12.png" in names and any(n.startswith("ann_") for n in names)
    assert all((tmp_path / n).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n" for n in names)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckeann.cli", "ann", "--n", "3", "--lambda", "3",
                           "--method", "closed"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["closed_rank"] == 5
