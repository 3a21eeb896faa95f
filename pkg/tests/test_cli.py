import csv
import io
import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from landen import Quadratic
from landen.cli import ConfigError, RunConfig, build_parser, config_from_args, main, run
from landen.quad_landen import trace


def invoke(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    if env is not None:
        ns = build_parser().parse_args(list(argv))
        code = run(config_from_args(ns, env), out, err)
    else:
        code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_trace_quad_csv_schema():
    code, out, _ = invoke("trace-quad", "--a", "4", "--b", "3", "--c", "1", "--iters", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == "n,a,b,c,residual"
    assert [int(r["n"]) for r in rows] == [0, 1, 2, 3, 4]
    assert "\r" not in out
    expected = trace(Quadratic(4.0, 3.0, 1.0), 4)
    for r, e in zip(rows, expected):
        assert (float(r["a"]), float(r["b"]), float(r["c"])) == tuple(e.state)


def test_trace_quad_json_round_trip():
    code, out, _ = invoke("trace-quad", "--a", "4", "--b", "3", "--c", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"params", "rows", "limit", "closed_form"}
    _, expected = __import__("landen").iterate(Quadratic(4.0, 3.0, 1.0))
    assert len(doc["rows"]) == len(expected)
    for row, e in zip(doc["rows"], expected):
        assert (row["a"], row["b"], row["c"], row["residual"]) == (*e.state, e.residual)
    assert doc["limit"] == expected[-1].state.a
    assert doc["closed_form"] == math.sqrt(7) / 2


def test_trace_quad_rational_backend():
    code, out, _ = invoke(
        "trace-quad", "--a", "4", "--b", "3", "--c", "1", "--iters", "1",
        "--backend", "rational", "--format", "csv",
    )
    assert code == 0
    row1 = list(csv.DictReader(io.StringIO(out)))[1]
    assert [Fraction(row1[k]) for k in "abc"] == [Fraction(44, 41), Fraction(27, 41), Fraction(71, 41)]


def test_rational_backend_rejected_for_float_modes():
    code, _, err = invoke("agm", "--a", "1", "--b", "2", "--backend", "rational")
    assert code == 2 and "rational" in err


def test_eval_quad_text():
    code, out, _ = invoke("eval-quad", "--a", "1", "--b", "0", "--c", "1")
    assert code == 0
    values = dict(line.split(": ") for line in out.splitlines()[1:])
    assert float(values["value"]) == pytest.approx(math.pi, rel=1e-15)
    assert float(values["closed_form"]) == pytest.approx(2 * math.pi / math.sqrt(4), rel=1e-15)


def test_eval_quad_invalid_coefficients():
    code, out, err = invoke("eval-quad", "--a", "1", "--b", "3", "--c", "1")
    assert code == 1 and out == "" and "InvalidInputError" in err


def test_eval_quad_no_convergence():
    code, _, err = invoke("eval-quad", "--a", "100", "--b", "0", "--c", "0.01", "--max-iter", "1")
    assert code == 1 and "NoConvergenceError" in err


def test_agm_and_elliptic():
    code, out, _ = invoke("agm", "--a", "1", "--b", repr(math.sqrt(2)), "--format", "json")
    assert code == 0 and json.loads(out)["agm"] == pytest.approx(1.1981402347355922, rel=1e-15)
    code, out, _ = invoke("elliptic", "--k", "0.5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["difference"] < 1e-9
    code, _, err = invoke("elliptic", "--a", "1")
    assert code == 2


def test_lemniscate_mode():
    code, out, _ = invoke("lemniscate", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert code == 0 and float(row["difference"]) < 5e-12


def test_degree6_mode():
    code, out, _ = invoke("degree6", "--a", "0", "--b", "0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["converged"] and doc["steps"] <= 25
    code, _, _ = invoke("degree6", "--a", "0", "--b", "0", "--max-iter", "1")
    assert code == 1


def test_verify_all():
    code, out, _ = invoke("verify", "--suite", "all", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["failed"] == 0 and doc["passed"] > 0
    names = {r["suite"] for r in doc["rows"]}
    assert {"discriminant", "identity", "vanishing", "gauss", "conjugacy"} <= names


def test_verify_single_suite():
    code, out, _ = invoke("verify", "--suite", "lemniscate", "--suite", "degree6", "--format", "csv")
    assert code == 0
    assert [r["suite"] for r in csv.DictReader(io.StringIO(out))] == ["lemniscate", "degree6"]


def test_precedence_flag_env_file(tmp_path):
    cfg = tmp_path / "landen.cfg"
    cfg.write_text("# settings\ntol = 1e-3\nformat=csv\nmax_iter=7\n")
    parse = build_parser().parse_args

    c = config_from_args(parse(["eval-quad", "--a", "1", "--b", "0", "--c", "2", "--config", str(cfg)]), {})
    assert (c.tol, c.format, c.max_iter) == (1e-3, "csv", 7)

    env = {"LANDEN_TOL": "1e-5", "LANDEN_FORMAT": "json", "LANDEN_MAX_ITER": "9"}
    c = config_from_args(parse(["eval-quad", "--a", "1", "--b", "0", "--c", "2", "--config", str(cfg)]), env)
    assert (c.tol, c.format, c.max_iter) == (1e-5, "json", 9)

    c = config_from_args(
        parse(["eval-quad", "--a", "1", "--b", "0", "--c", "2", "--config", str(cfg), "--tol", "1e-8", "--format", "text"]),
        env,
    )
    assert (c.tol, c.format) == (1e-8, "text")


def test_env_format_applies():
    code, out, _ = invoke("eval-quad", "--a", "1", "--b", "0", "--c", "1", env={"LANDEN_FORMAT": "json"})
    assert code == 0 and json.loads(out)["steps"] == 0


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("tol 1e-3\n")
    code, _, err = invoke("eval-quad", "--a", "1", "--b", "0", "--c", "1", "--config", str(cfg))
    assert code == 2 and "key=value" in err


@pytest.mark.parametrize(
    "kwargs",
    [{"tol": 0.0}, {"max_iter": 0}, {"format": "xml"}, {"backend": "decimal"}, {"mode": "plot"}],
)
def test_run_config_invariants(kwargs):
    base = {"mode": "eval-quad"}
    base.update(kwargs)
    with pytest.raises(ConfigError):
        RunConfig(**base)


def test_parse_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["trace-quad", "--a", "4"], io.StringIO(), io.StringIO())
    assert exc.value.code == 2


def test_deterministic_output():
    argv = ("trace-quad", "--a", "3", "--b", "1", "--c", "5", "--format", "json")
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "landen", "trace-quad", "--a", "4", "--b", "3", "--c", "1", "--iters", "1", "--format", "csv"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.splitlines()[2].startswith("1,1.0731707317073171,")
