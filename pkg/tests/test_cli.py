import json
import math

import pytest

from volterrakit import cli, oracle
from volterrakit import ineqlab as L
from volterrakit.volterra import VolterraParams as P


def test_eval_trivial_lines():
    code, out, _ = cli.run(["eval", "g", "--x", "0.5", "--alpha", "2", "--beta", "1",
                            "--s", "0"])
    assert code == 0 and out.startswith("1.0,")
    code, out, _ = cli.run(["eval", "mu-lower", "--s", "0", "--x", "1"])
    assert (code, out) == (0, "0.0,0.0\n")


def test_eval_nu_matches_golden():
    ref = next(r for r in oracle.read_golden()
               if r["function"] == "mu" and r["x"] == 1.0 and r["alpha"] == 0.0
               and r["beta"] == 0.0)
    code, out, _ = cli.run(["eval", "nu", "--x", "1"])
    value, bound = map(float, out.strip().split(","))
    assert code == 0
    assert abs(value - ref["value"]) <= bound + ref["bound"]


def test_eval_round_trip_text():
    _, out, _ = cli.run(["eval", "mu", "--x", "1.7", "--alpha", "0.25", "--beta", "0.5"])
    value, bound = out.strip().split(",")
    assert repr(float(value)) == value and repr(float(bound)) == bound


@pytest.mark.parametrize("argv", [
    ["eval", "nu", "--x", "-1"],
    ["eval", "mu-upper", "--x", "1"],
    ["eval", "nu-neg", "--x", "0"],
    ["eval", "bogus"],
    ["verify", "not-a-check"],
])
def test_usage_and_domain_errors_exit_2(argv):
    code, _, err = cli.run(argv)
    assert code == 2 and err.startswith("error:")


def test_domain_message_names_precondition():
    _, _, err = cli.run(["eval", "mu", "--x", "1", "--alpha", "-2"])
    assert "alpha must be > -1" in err


def test_env_tolerance(monkeypatch):
    monkeypatch.setenv("VOLTERRA_TOL", "1e-6")
    _, loose, _ = cli.run(["eval", "nu", "--x", "2"])
    monkeypatch.delenv("VOLTERRA_TOL")
    _, tight, _ = cli.run(["eval", "nu", "--x", "2"])
    assert float(loose.split(",")[1]) >= float(tight.split(",")[1])


def test_power_mean_eval():
    code, out, _ = cli.run(["eval", "power-mean", "--r=-inf", "--x", "1", "--y", "2",
                            "--lambda", "0.5"])
    assert (code, out) == (0, "1.0,0.0\n")


def test_table_matches_eval_and_formats_agree():
    args = ["--x", "0.5,1", "--alpha", "0", "--beta", "0,1"]
    code, csv_out, _ = cli.run(["table", "mu"] + args)
    _, json_out, _ = cli.run(["table", "mu", "--format", "json"] + args)
    lines = csv_out.strip().split("\n")
    assert code == 0 and lines[0] == "x,alpha,beta,value,abs_error_bound"
    records = json.loads(json_out)
    assert len(records) == len(lines) - 1 == 4
    for line, rec in zip(lines[1:], records):
        assert [float(v) for v in line.split(",")] == [rec[k] for k in
                                                      ("x", "alpha", "beta", "value",
                                                       "abs_error_bound")]
    _, single, _ = cli.run(["table", "mu", "--x", "0.5", "--alpha", "0", "--beta", "1"])
    _, ev, _ = cli.run(["eval", "mu", "--x", "0.5", "--alpha", "0", "--beta", "1"])
    assert single.split("\n")[1].endswith(ev.strip())


def test_table_empty_grid(tmp_path):
    grid = tmp_path / "empty.csv"
    grid.write_text("x,alpha,beta\n")
    _, out, _ = cli.run(["table", "mu", "--grid", str(grid)])
    assert out == "x,alpha,beta,value,abs_error_bound\n"
    _, out, _ = cli.run(["table", "mu", "--grid", str(grid), "--format", "json"])
    assert json.loads(out) == []


def test_verify_single_point_matches_library():
    code, out, err = cli.run(["verify", "turan-alpha", "--x", "1", "--alpha", "0",
                              "--beta", "0"])
    header, row = out.strip().split("\n")
    assert header == "check,x,alpha,beta,lhs,rhs,margin,combined_error,verdict"
    rep = L.check_turan_alpha(P(1.0, 0.0, 0.0))
    fields = row.split(",")
    assert fields[0] == "turan-alpha"
    assert float(fields[6]) == rep.margin and fields[-1] == rep.verdict
    assert code == 0 and "0 fails" in err


def test_verify_exit_one_on_failure():
    code, out, err = cli.run(["verify", "turan-alpha", "--x", "5", "--alpha", "-0.5",
                              "--beta", "-0.5"])
    assert code == 1 and out.strip().endswith("fails") and "1 fails" in err


def test_verify_grid_file_and_tol_stability(tmp_path):
    grid = tmp_path / "pts.csv"
    grid.write_text("check,x,alpha,beta\nturan-alpha,0.3,0,1\nturan-beta,2,1,-0.5\n"
                    "turan-alpha,1,3,2.5\n")
    code, out, _ = cli.run(["verify", "--grid", str(grid)])
    rows = [ln.split(",") for ln in out.strip().split("\n")[1:]]
    assert code == 0 and [r[0] for r in rows] == ["turan-alpha", "turan-alpha",
                                                 "turan-beta-lower", "turan-beta-upper"]
    _, loose, _ = cli.run(["verify", "--grid", str(grid), "--tol", "1e-6"])
    tight_v = [r[-1] for r in rows]
    loose_v = [ln.split(",")[-1] for ln in loose.strip().split("\n")[1:]]
    for a, b in zip(tight_v, loose_v):
        assert not (b == "fails" and a != "fails")


def test_verify_parallel_byte_identical(tmp_path):
    args = ["verify", "kimberling", "delta-n", "--x", "0.5,1", "--y", "1,2",
            "--alpha", "0", "--beta", "0,1", "--n", "1,3"]
    one = cli.run(args + ["--parallel", "1"])
    many = cli.run(args + ["--parallel", "8"])
    assert one == many


def test_verify_list():
    code, out, _ = cli.run(["verify", "--list"])
    assert code == 0 and set(ln.split("\t")[0] for ln in out.strip().split("\n")) == set(L.CHECKS)


def test_golden_command(tmp_path):
    code, out, _ = cli.run(["golden", "--out", str(tmp_path / "g.csv")])
    assert code == 0
    assert oracle.read_golden(tmp_path / "g.csv") == oracle.read_golden()


def test_number_formatting():
    assert cli.fmt(0.1) == "0.1"
    assert cli.fmt(math.inf) == "inf"
    assert cli.fmt(3) == "3"
    assert cli.parse_value("r", "-inf") == -math.inf
    assert cli.parse_value("n", "3") == 3
