import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from toricmj.cli import main

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def problem(tmp_path, **data):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_membership_example(capsys):
    code, out, _ = run(capsys, "membership", "--input", str(PROBLEMS / "cusp.json"),
                       "--m", "3", "--lambda", "1/2")
    assert code == 0 and json.loads(out) == {"member": True}


def test_generators_example(capsys):
    code, out, _ = run(capsys, "generators", "--input", str(PROBLEMS / "cusp.json"),
                       "--lambda", "0", "--degree-bound", "20")
    assert code == 0
    assert json.loads(out) == {"generators": [[2], [3]], "completeness": "EXACT"}


def test_verify_quadric(capsys):
    code, out, _ = run(capsys, "verify", "--input", str(PROBLEMS / "quadric.json"),
                       "--samples", "100", "--seed", "7")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert len(data["checks"]) == 7 and all(c["passed"] for c in data["checks"])


@pytest.mark.parametrize("name", ["cusp", "plane_x2_y3", "semigroup_345", "cusp_embedded"])
def test_verify_other_problems(capsys, name):
    code, out, _ = run(capsys, "verify", "--input", str(PROBLEMS / f"{name}.json"),
                       "--samples", "40", "--seed", "3")
    assert code == 0, out


def test_threshold_and_jumping(capsys):
    path = str(PROBLEMS / "plane_x2_y3.json")
    _, out, _ = run(capsys, "threshold", "--input", path, "--m", "0,0")
    assert json.loads(out) == {"threshold": "5/6", "never_member": False}
    _, out, _ = run(capsys, "jumping", "--input", path, "--lambda", "1")
    assert json.loads(out) == {"jumping_candidates": ["5/6"], "completeness": "BOUNDED"}


def test_structural_commands(capsys):
    path = str(PROBLEMS / "semigroup_345.json")
    _, out, _ = run(capsys, "markov", "--input", path)
    assert json.loads(out) == {"markov_basis": [[1, -2, 1], [3, -1, -1], [2, 1, -2]],
                               "verified": True}
    _, out, _ = run(capsys, "jacobian", "--input", path)
    assert json.loads(out)["jprime"] == [[5], [6], [7]]
    _, out, _ = run(capsys, "log-jacobian", "--input", path)
    assert json.loads(out) == {"log_jacobian": [[3], [4], [5]]}


def test_coordinate_change_is_echoed(capsys):
    code, out, _ = run(capsys, "generators", "--input", str(PROBLEMS / "cusp_embedded.json"))
    data = json.loads(out)
    assert code == 0
    assert data["coordinate_change"] == [[1, 0]]
    assert data["generators"] == [[4], [5]]


def test_membership_in_input_coordinates(capsys):
    path = str(PROBLEMS / "cusp_embedded.json")
    _, out, _ = run(capsys, "membership", "--input", path, "--m", "4,0")
    assert json.loads(out)["member"] is True
    code, _, err = run(capsys, "membership", "--input", path, "--m", "4,1")
    assert code == 1 and err


def test_user_markov_basis_is_flagged(capsys, tmp_path):
    path = problem(tmp_path, ambient_rank=1, semigroup_generators=[[2], [3]],
                   ideal_generators=[[2]], markov_basis=[[3, -2]])
    _, out, _ = run(capsys, "markov", "--input", path)
    assert json.loads(out) == {"markov_basis": [[3, -2]], "verified": False}


@pytest.mark.parametrize("data, argv", [
    ({"ambient_rank": 2, "semigroup_generators": [[1]], "ideal_generators": []}, ["markov"]),
    ({"ambient_rank": 1, "semigroup_generators": [[1], [-1]], "ideal_generators": [[1]]}, ["markov"]),
    ({"ambient_rank": 1, "semigroup_generators": [[2], [3]], "ideal_generators": [[1]]}, ["newton"]),
    ({"ambient_rank": 1, "semigroup_generators": [[2], [3]], "ideal_generators": [[2]],
      "lambda": "-1/2"}, ["generators"]),
    ({"ambient_rank": 1, "semigroup_generators": [[2], [3]], "ideal_generators": [[2]],
      "markov_basis": [[1, 1]]}, ["markov"]),
    ({"ambient_rank": 1, "semigroup_generators": [[2], [3]], "ideal_generators": [[2]],
      "degree_bound": 0}, ["markov"]),
    ({"ambient_rank": 1, "semigroup_generators": [[2], [3]], "ideal_generators": [[2]]},
     ["membership", "--m", "4", "--lambda", "x"]),
    ({"ambient_rank": 1}, ["markov"]),
])
def test_invalid_input_exits_one(capsys, tmp_path, data, argv):
    path = problem(tmp_path, **data)
    code, out, err = run(capsys, argv[0], "--input", path, *argv[1:])
    assert code == 1 and out == "" and err.startswith("error:")


def test_missing_file_exits_one(capsys, tmp_path):
    code, _, _ = run(capsys, "markov", "--input", str(tmp_path / "nope.json"))
    assert code == 1


def test_budget_exits_two(capsys, monkeypatch):
    from toricmj import resolution
    monkeypatch.setattr(resolution, "DEFAULT_BUDGET", 0)
    monkeypatch.setattr(resolution.build_resolution, "__defaults__", (0, True))
    code, _, err = run(capsys, "verify", "--input", str(PROBLEMS / "plane_x2_y3.json"),
                       "--samples", "5")
    assert code == 2 and err.startswith("budget exceeded")


def test_pair_cap_exits_two(capsys, monkeypatch):
    from toricmj import toric_ideal
    monkeypatch.setattr(toric_ideal.markov_basis, "__defaults__", (0,))
    code, _, _ = run(capsys, "markov", "--input", str(PROBLEMS / "semigroup_345.json"))
    assert code == 2


def test_output_is_deterministic_and_exact():
    argv = [sys.executable, "-m", "toricmj", "verify", "--input",
            str(PROBLEMS / "plane_x2_y3.json"), "--samples", "30", "--seed", "4"]
    first = subprocess.run(argv, capture_output=True).stdout
    second = subprocess.run(argv, capture_output=True).stdout
    assert first == second and first
    for cmd in (["newton"], ["threshold", "--m", "1,0"], ["jumping", "--lambda", "2"]):
        out = subprocess.run([sys.executable, "-m", "toricmj", *cmd, "--input",
                              str(PROBLEMS / "plane_x2_y3.json")], capture_output=True).stdout
        assert not re.search(rb"\d\.\d|e[+-]\d", out)

    def no_floats(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                no_floats(v)
        elif isinstance(x, list):
            for v in x:
                no_floats(v)

    no_floats(json.loads(first))


def test_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--input", str(PROBLEMS / "cusp.json"),
                       "--samples", "10", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert "minor_congruence" in lines[0] and lines[0].endswith("PASS")
    assert len({line.index("  ") for line in lines if "  " in line}) >= 1
