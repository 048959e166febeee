import json
import subprocess
import sys

import pytest

from bethe_yangian.cli import main


def run_json(capsys, *argv):
    code = main(["run", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_commute_example(capsys):
    code, rep = run_json(capsys, "commute", "--n", "2", "--trunc", "4", "--deg", "3", "--c", "1,2")
    assert code == 0 and rep["status"] == "pass"
    assert set(rep) == {"check", "params", "status", "details", "constants", "wall_time_ms"}
    assert rep["constants"]["epsilon"] == 1
    assert rep["wall_time_ms"] is None


def test_block_limit_example(capsys):
    code, rep = run_json(capsys, "thm65", "--n", "2", "--k", "1", "--c0", "2", "--c1", "3",
                         "--deg", "3")
    assert code == 0 and rep["status"] == "pass"


def test_nf_example(capsys):
    code, rep = run_json(capsys, "nf", "--n", "2", "--expr", "t[1,2;1]*t[1,1;1]")
    assert code == 0
    assert "-t[1,2;1] + t[1,1;1]*t[1,2;1]" in json.dumps(rep["details"])


@pytest.mark.parametrize("argv", [
    ["minor", "--n", "3", "--rows", "1,2", "--cols", "2,3"],
    ["tau", "--n", "2", "--c", "2,3"],
    ["tau", "--n", "2", "--c", "1,2;3,4"],
    ["poincare", "--n", "2", "--deg", "3", "--c", "2,5"],
    ["poisson", "--n", "2", "--deg", "2", "--c", "2,5"],
    ["jacobian", "--n", "2", "--deg", "3", "--c", "2,5"],
    ["abc", "--n", "3", "--trunc", "3", "--abc-form", "corrected"],
    ["gt-centralizer", "--n", "2", "--deg", "2"],
    ["wonderful-limit", "--n", "3", "--curve", "1:0,2:0,5:1", "--curve", "1:0,2:1,5:1"],
    ["bethelevi", "--n", "3", "--curve", "1:0,2:0,5:1", "--deg", "2"],
    ["rtt", "--seed", "3"],
])
def test_checks_pass(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == 0 and rep["status"] == "pass", rep


def test_printed_abc_fails_with_exit_one(capsys):
    code, rep = run_json(capsys, "abc", "--n", "3", "--trunc", "3")
    assert code == 1 and rep["status"] == "fail"


def test_constants_recorded(capsys):
    _, rep = run_json(capsys, "tau", "--n", "3", "--c", "1,2,3")
    consts = rep["constants"]
    assert consts["kappa"] == ["1", "2", "6"]
    assert consts["abc_shifts"] == ["0", "1"]


def test_non_regular_poincare_reports_control(capsys):
    code, rep = run_json(capsys, "poincare", "--n", "2", "--deg", "3", "--c", "1,1")
    assert code == 0
    assert rep["details"][0]["regular"] is False
    assert rep["details"][1]["strict_drop"] is True


def test_curve_length_mismatch(capsys):
    assert main(["run", "wonderful-limit", "--n", "2", "--curve", "1:0,2:0,5:1"]) == 2


@pytest.mark.parametrize("argv", [
    ["nf", "--expr", "t[1,2;1]*"],
    ["nf"],
    ["commute", "--n", "0"],
    ["commute", "--deg", "3", "--trunc", "2"],
    ["thm65", "--n", "2", "--c0", "2"],
    ["wonderful-limit", "--n", "3", "--curve", "1:0,2"],
    ["tau", "--c", "1,x"],
    ["acceptance", "--criterion", "42"],
])
def test_config_errors_exit_two(capsys, argv):
    assert main(["run", *argv]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_check_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["run", "nonsense"])
    assert exc.value.code == 2


def test_determinism_byte_identical(tmp_path):
    paths = []
    for name in ("a.json", "b.json"):
        p = tmp_path / name
        assert main(["run", "commute", "--n", "2", "--deg", "2", "--seed", "7", "-o", str(p)]) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_seed_changes_random_parameter(tmp_path):
    out = []
    for seed in ("1", "2"):
        p = tmp_path / f"{seed}.json"
        main(["run", "tau", "--n", "2", "--seed", seed, "-o", str(p)])
        out.append(json.loads(p.read_text())["details"][0]["C"])
    assert out[0] != out[1]


def test_timing_flag(capsys):
    _, rep = run_json(capsys, "nf", "--expr", "t[1,1;1]", "--timing")
    assert isinstance(rep["wall_time_ms"], float)


def test_text_format(capsys):
    assert main(["run", "nf", "--expr", "t[1,1;1]", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("check: nf\nstatus: pass\n")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bethe_yangian", "run", "nf", "--expr",
                           "t[2,1;1]*t[1,1;1]"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["check"] == "nf"
