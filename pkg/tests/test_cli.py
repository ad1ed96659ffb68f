import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from sweepweno.cli import main


def _rows(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_list(capsys):
    assert main(["list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 13
    assert "120x30" in lines[7] and "1e-12" in lines[7]
    assert "1e-13" in lines[12]


def test_run_case1(tmp_path):
    code = main(["run", "--case", "1", "--scheme", "fe-sweep", "--cfl", "1.0", "--nx", "40", "--out", str(tmp_path)])
    assert code == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["outcome"] == "converged"
    assert abs(summary["iterations"] - 155) <= 0.25 * 155
    assert set(summary["errors"]) == {"L1", "Linf"}
    res = _rows(tmp_path / "residue.csv")
    assert res[0] == ["iteration", "resA", "dt", "time"]
    assert len(res) == summary["iterations"] + 1
    assert float(res[-1][1]) < 1e-13
    # 16 significant digits
    assert len(res[1][1].split("e")[0].replace(".", "").lstrip("-")) == 16
    field = np.loadtxt(tmp_path / "field.csv", delimiter=",", skiprows=1)
    assert field.shape == (40, 2)
    assert _rows(tmp_path / "field.csv")[0] == ["x", "u"]


def test_run_is_deterministic(tmp_path):
    args = ["run", "--case", "3", "--scheme", "fe-sweep", "--cfl", "1.0", "--nx", "10"]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    for name in ("residue.csv", "field.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    header = _rows(tmp_path / "a" / "field.csv")[0]
    assert header == ["x", "y", "u"]


def test_dump_every(tmp_path):
    code = main(["run", "--case", "1", "--scheme", "rk3-jacobi", "--cfl", "1.0", "--nx", "10",
                 "--dump-every", "100", "--out", str(tmp_path)])
    assert code == 0
    dumps = sorted(p.name for p in tmp_path.glob("field_*.csv"))
    # RK3 counts move in threes, so dumps land on the first count past each multiple
    assert dumps == ["field_102.csv", "field_201.csv"]


def test_not_convergent_exit_code(tmp_path):
    code = main(["run", "--case", "1", "--scheme", "fe-jacobi", "--cfl", "0.1", "--nx", "10",
                 "--max-iters", "5", "--out", str(tmp_path)])
    assert code == 2
    assert json.loads((tmp_path / "summary.json").read_text())["outcome"] == "not_convergent"


def test_diverged_exit_code(tmp_path):
    code = main(["run", "--case", "1", "--scheme", "fe-jacobi", "--cfl", "50", "--nx", "10",
                 "--max-iters", "2000", "--out", str(tmp_path)])
    assert code == 3
    assert json.loads((tmp_path / "summary.json").read_text())["outcome"] == "diverged"


@pytest.mark.parametrize("argv", [
    ["run", "--case", "99", "--scheme", "fe-sweep", "--cfl", "1.0"],
    ["run", "--case", "1", "--scheme", "gauss", "--cfl", "1.0"],
    ["run", "--case", "1", "--scheme", "fe-sweep", "--cfl", "-1"],
    ["run", "--case", "1", "--scheme", "fe-sweep"],
    ["run", "--case", "1", "--scheme", "fe-sweep", "--cfl", "1", "--threads", "0"],
    ["table", "--case", "6", "--scheme", "fe-sweep", "--cfl", "1.0", "--meshes", "10"],
    ["table", "--case", "1", "--scheme", "fe-sweep", "--cfl", "1.0", "--meshes", "a,b"],
    [],
    ["frobnicate"],
])
def test_usage_errors(argv, tmp_path, capsys):
    if argv[:1] in (["run"], ["table"]):
        argv = argv + ["--out", str(tmp_path)]
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects the flags itself
        code = exc.code
    assert code == 1
    assert capsys.readouterr().err


def test_table(tmp_path):
    code = main(["table", "--case", "1", "--scheme", "fe-sweep", "--cfl", "1.0", "--meshes", "10,20,40,80",
                 "--out", str(tmp_path)])
    assert code == 0
    rows = _rows(tmp_path / "accuracy.csv")
    assert rows[0] == ["N", "L1", "L1_order", "Linf", "Linf_order", "iterations", "wall_seconds"]
    assert [r[0] for r in rows[1:]] == ["10", "20", "40", "80"]
    assert rows[1][2] == "" and rows[1][4] == ""
    assert float(rows[-1][2]) > 4.5


def test_table_single_mesh(tmp_path):
    assert main(["table", "--case", "1", "--scheme", "fe-sweep", "--cfl", "1.0", "--meshes", "10",
                 "--out", str(tmp_path)]) == 0
    rows = _rows(tmp_path / "accuracy.csv")
    assert len(rows) == 2 and rows[1][2] == ""


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "sweepweno", "list"], capture_output=True, text=True, check=True)
    assert len(out.stdout.strip().splitlines()) == 13
