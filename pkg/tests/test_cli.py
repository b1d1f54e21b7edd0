import json
import math
import subprocess
import sys

import numpy as np
import pytest

from rhocap.cli import main
from rhocap.cliqueunion import CliqueUnion, capacity_array
from rhocap.curves import from_json, to_json

H04 = 0.970950594455


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def families(tmp_path):
    files = {
        "pairs": "(4,5) (5,5)\n(2,1) (2,5)\n(1,3) (2,3)\n(4,2) (4,3)\n",
        "mixed": "(4,1) (4,2)\n(1,1) (1,2) (2,1) (2,2)\n(1,4) (2,4) (3,4) (4,4) (5,4)\n",
        "rows": "".join(" ".join(f"({a},{b})" for b in range(1, 6)) + "\n" for a in (1, 3, 4)),
        "empty": "# nothing here\n",
    }
    paths = {}
    for name, text in files.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_alphak(capsys):
    assert run_json(capsys, "alphak", "C5", "--k", "2")["alpha_k"] == 1
    assert run_json(capsys, "alphak", "K4", "--k", "2")["alpha_k"] == 1
    rep = run_json(capsys, "alphak", "C5", "--k", "2", "--n", "2")
    assert rep["alpha_k"] >= 4 and len(rep["witness"]) == rep["alpha_k"]


def test_curve_json_and_csv(capsys, tmp_path):
    d = run_json(capsys, "curve", "U:1,2")
    assert d["kind"] == "exact"
    assert abs(np.interp(0.6, d["grid"], d["lower"]) - H04) < 1e-6
    d = run_json(capsys, "curve", "K4-K2")
    assert d["kind"] == "bounds"
    assert any(c["theorem"] == "Prop5+alpha" for c in d["certificates"])
    assert max(abs(lo - (1 - r / 2)) for r, lo in zip(d["grid"], d["lower"])) < 1e-9
    d = run_json(capsys, "curve", "C5")
    assert any(c["theorem"] == "Thm4-spectral" for c in d["certificates"])
    code, out, _ = run(capsys, "curve", "C5", "--format", "csv", "--grid", "33")
    assert code == 0 and out.startswith("rho,lower,upper\n")
    out_file = tmp_path / "c.json"
    assert main(["curve", "U:1,2", "--out", str(out_file)]) == 0
    assert json.loads(out_file.read_text())["kind"] == "exact"


def test_points(capsys):
    r = run_json(capsys, "points", "U:12x2,6x8")
    assert r["free_lunch_point"] == pytest.approx(5 / 3, abs=1e-11)
    assert r["packing_point"] == pytest.approx(7 / 3, abs=1e-11)
    r = run_json(capsys, "points", "C5")
    assert r["packing_point"] == pytest.approx(math.log2(5), abs=1e-11)
    assert r["uniform_clique_union"] is False
    r = run_json(capsys, "points", "U:3x4")
    assert r["free_lunch_point"] == r["packing_point"] == 2 and r["uniform_clique_union"] is True


def test_verify(capsys, families):
    r = run_json(capsys, "verify", "C5", families["pairs"], "--n", "2")
    assert r == {"accepted": True, "n": 2, "subsets": 4, "rho": 0.5, "R": 1.0}
    r = run_json(capsys, "verify", "C5", families["mixed"], "--n", "2")
    assert r["R"] == pytest.approx(0.5 * math.log2(3), abs=1e-11)
    code, out, _ = run(capsys, "verify", "C5", families["rows"], "--n", "2")
    r = json.loads(out)
    assert code == 4 and r["accepted"] is False
    assert {p[1] for p in r["pair"]} == {"3", "4"}
    code, out, _ = run(capsys, "verify", "C5", families["empty"], "--n", "2")
    assert code == 4 and json.loads(out)["reason"] == "empty family"


def test_oracle(capsys):
    r = run_json(capsys, "oracle", "U:1,2", "--n", "2", "--rho", "0.6")
    assert (r["A_num"], r["B"]) == ("5", "1")
    r = run_json(capsys, "oracle", "U:1,2", "--n", "64", "--rho", "0.6")
    assert r["gap"] < 0.05 and isinstance(r["A_num"], str)
    code, _, err = run(capsys, "oracle", "U:1,2", "--n", "4", "--rho", "0.3")
    assert code == 2 and "outside" in err
    assert run_json(capsys, "oracle", "C5", "--k", "2", "--n", "1")["alpha_k"] == 1


def test_algebra(capsys, tmp_path):
    x = run_json(capsys, "algebra", "xclique", "U:1,2", "--m", "2")
    ref = run_json(capsys, "curve", "U:2,4")
    assert np.max(np.abs(np.array(x["lower"]) - capacity_array(CliqueUnion.of([2, 4]), np.array(x["grid"])))) < 1e-9
    assert ref["log_m"] == x["log_m"]
    s = run_json(capsys, "algebra", "supconv", "U:1,2", "U:1,2")
    assert np.max(np.abs(np.array(s["lower"]) - capacity_array(CliqueUnion.of([1, 2, 2, 4]), np.array(s["grid"])))) < 1e-6
    d = run_json(capsys, "algebra", "doubleunion", "U:2")
    assert np.max(np.abs(np.array(d["lower"]) - capacity_array(CliqueUnion.of([2, 2]), np.array(d["grid"])))) < 1e-12
    u = run_json(capsys, "algebra", "unionclique", "U:1", "--m", "2")
    assert u["kind"] == "lower"
    f = tmp_path / "c.json"
    main(["curve", "U:1,2", "--out", str(f)])
    capsys.readouterr()
    v = run_json(capsys, "algebra", "doubleunion", str(f))
    assert v["log_m"] == pytest.approx(math.log2(6))
    assert run(capsys, "algebra", "xclique", "U:1,2")[0] == 2
    assert run(capsys, "algebra", "supconv", "U:1,2")[0] == 2


def test_round_trip_and_determinism(capsys, tmp_path):
    for args in (["curve", "C5"], ["algebra", "unionclique", "U:1,2", "--m", "3"]):
        code, out1, _ = run(capsys, *args)
        code, out2, _ = run(capsys, *args)
        assert out1 == out2
        f = tmp_path / "c.json"
        f.write_text(out1)
        lo, up = from_json(out1)
        c = lo if lo is not None else up
        if json.loads(out1)["kind"] != "bounds":
            assert to_json(c) + "\n" == out1


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "alphak", "nosuchgraph", "--k", "2")[0] == 2
    assert run(capsys, "alphak", "C5", "--k", "0")[0] == 2
    assert run(capsys, "alphak", "C5", "--k", "2", "--n", "9", "--max-power-vertices", "1000")[0] == 3
    assert run(capsys, "oracle", "C5", "--k", "2", "--n", "3", "--max-power-vertices", "64")[0] == 3
    code, _, err = run(capsys, "oracle", "C5", "--k", "2", "--n", "3", "--timeout-s", "0.5")
    assert code == 3 and "best lower bound" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3\ne 1 9\n")
    code, _, err = run(capsys, "curve", str(bad))
    assert code == 2 and "line 2" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rhocap", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("rhocap ")
