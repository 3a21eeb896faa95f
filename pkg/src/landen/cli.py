"""Command-line front end: ``landen <mode> [options]``.

Settings resolve as flags > ``LANDEN_*`` environment variables > a
``key=value`` config file (``--config``) > per-mode defaults.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, TextIO

from . import agm_elliptic as agm_mod
from . import quad_landen as ql
from .degree6 import Degree6Denominator, denominator_positive, iterate6
from .errors import LandenError
from .verify import run_suites

MODES = ("eval-quad", "trace-quad", "agm", "elliptic", "lemniscate", "degree6", "verify")
FORMATS = ("text", "csv", "json")
BACKENDS = ("float", "rational")
RATIONAL_MODES = ("trace-quad", "verify")

DEFAULT_TOL = {
    "eval-quad": ql.DEFAULT_TOL,
    "trace-quad": ql.DEFAULT_TOL,
    "agm": agm_mod.DEFAULT_TOL,
    "elliptic": agm_mod.DEFAULT_TOL,
    "lemniscate": 5e-12,
    "degree6": 1e-10,
    "verify": 1e-9,
}
DEFAULT_MAX_ITER = {"degree6": 25}

ENV_KEYS = {"tol": "LANDEN_TOL", "max_iter": "LANDEN_MAX_ITER", "format": "LANDEN_FORMAT"}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str
    params: Dict[str, Any] = field(default_factory=dict)
    tol: float = ql.DEFAULT_TOL
    max_iter: int = ql.DEFAULT_MAX_ITER
    format: str = "text"
    backend: str = "float"

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.max_iter < 1:
            raise ConfigError("max_iter must be at least 1")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.backend not in BACKENDS:
            raise ConfigError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.backend == "rational" and self.mode not in RATIONAL_MODES:
            raise ConfigError(f"rational backend is only available for {RATIONAL_MODES}")


@dataclass
class Report:
    mode: str
    params: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    rows: Optional[List[Dict[str, Any]]] = None
    ok: bool = True


# ---------------------------------------------------------------- rendering


def render_value(v: Any) -> Any:
    """JSON-ready form: floats stay floats (repr is shortest round-trip),
    fractions become ``"p/q"`` strings."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {k: render_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [render_value(x) for x in v]
    return v


def _cell(v: Any) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        doc: Dict[str, Any] = {"mode": report.mode, "params": render_value(report.params)}
        if report.rows is not None:
            doc["rows"] = render_value(report.rows)
        doc.update(render_value(report.results))
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        table = report.rows if report.rows is not None else [report.results]
        header = list(table[0]) if table else []
        writer.writerow(header)
        for row in table:
            writer.writerow([_cell(row[k]) for k in header])
        return buf.getvalue()
    lines = [f"# {report.mode} " + " ".join(f"{k}={_cell(v)}" for k, v in report.params.items())]
    if report.rows:
        header = list(report.rows[0])
        lines.append("  ".join(f"{h:>24}" for h in header))
        for row in report.rows:
            lines.append("  ".join(f"{_cell(row[h]):>24}" for h in header))
    for k, v in report.results.items():
        lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- modes


def _number(text: Any, backend: str) -> Any:
    value = Fraction(str(text))
    return value if backend == "rational" else float(value)


def _quadratic(cfg: RunConfig) -> ql.Quadratic:
    p = cfg.params
    return ql.Quadratic(*(_number(p[k], cfg.backend) for k in ("a", "b", "c")))


def _quad_rows(tr: ql.IterationTrace) -> List[Dict[str, Any]]:
    return [
        {"n": r.n, "a": r.state.a, "b": r.state.b, "c": r.state.c, "residual": r.residual}
        for r in tr
    ]


def _eval_quad(cfg: RunConfig) -> Report:
    q = _quadratic(cfg)
    limit, tr = ql.iterate(q, cfg.tol, cfg.max_iter)
    return Report(
        cfg.mode,
        {"a": q.a, "b": q.b, "c": q.c},
        {
            "value": math.pi / float(limit),
            "closed_form": ql.integral_value(q),
            "limit": limit,
            "steps": tr.steps,
        },
    )


def _trace_quad(cfg: RunConfig) -> Report:
    q = _quadratic(cfg)
    iters = cfg.params.get("iters")
    if iters is not None:
        tr = ql.trace(q, int(iters))
    else:
        _, tr = ql.iterate(q, cfg.tol, cfg.max_iter)
    params = {"a": q.a, "b": q.b, "c": q.c, "backend": cfg.backend}
    return Report(
        cfg.mode,
        params,
        {"limit": tr[-1].state.a, "closed_form": ql.limit_value(q)},
        rows=_quad_rows(tr),
    )


def _agm(cfg: RunConfig) -> Report:
    pair = agm_mod.AgmPair(float(cfg.params["a"]), float(cfg.params["b"]))
    tr = agm_mod.agm_trace(pair, cfg.tol)
    rows = [{"n": r.n, "a": r.state.a, "b": r.state.b, "residual": r.residual} for r in tr]
    return Report(cfg.mode, {"a": pair.a, "b": pair.b}, {"agm": tr[-1].state.a}, rows=rows)


def _elliptic(cfg: RunConfig) -> Report:
    p = cfg.params
    if p.get("k") is not None:
        k = float(p["k"])
        a, b = 1.0, math.sqrt(1.0 - k * k)
    else:
        a, b = float(p["a"]), float(p["b"])
    g = agm_mod.elliptic_g(a, b, cfg.tol)
    quad = agm_mod.elliptic_g_quadrature(a, b)
    return Report(
        cfg.mode,
        {"a": a, "b": b},
        {"G": g, "K": a * g, "G_quadrature": quad.value, "difference": abs(g - quad.value)},
    )


def _lemniscate(cfg: RunConfig) -> Report:
    via_agm, via_integral = agm_mod.lemniscate_check()
    diff = abs(via_agm - via_integral)
    return Report(
        cfg.mode,
        {},
        {"agm_value": via_agm, "integral_value": via_integral, "difference": diff},
        ok=diff < cfg.tol,
    )


def _degree6(cfg: RunConfig) -> Report:
    a, b = float(cfg.params["a"]), float(cfg.params["b"])
    converged, tr = iterate6(Degree6Denominator(a, b), cfg.tol, cfg.max_iter)
    rows = [{"n": r.n, "a": r.state.a, "b": r.state.b, "residual": r.residual} for r in tr]
    return Report(
        cfg.mode,
        {"a": a, "b": b},
        {"converged": converged, "steps": tr.steps, "denominator_positive": denominator_positive(a, b)},
        rows=rows,
        ok=converged,
    )


def _verify(cfg: RunConfig) -> Report:
    names = cfg.params.get("suite") or ["all"]
    results = run_suites(list(names))
    rows = [
        {"suite": r.name, "passed": r.passed, "failed": r.failed, "status": "PASS" if r.ok else "FAIL"}
        for r in results
    ]
    passed = sum(r.passed for r in results)
    failed = sum(r.failed for r in results)
    report = Report(cfg.mode, {"suites": ",".join(r.name for r in results)}, {"passed": passed, "failed": failed}, rows=rows)
    report.ok = all(r.ok for r in results)
    if not report.ok:
        report.results["failures"] = [f for r in results for f in r.failures]
    return report


HANDLERS = {
    "eval-quad": _eval_quad,
    "trace-quad": _trace_quad,
    "agm": _agm,
    "elliptic": _elliptic,
    "lemniscate": _lemniscate,
    "degree6": _degree6,
    "verify": _verify,
}


def run(config: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Execute ``config`` and write the report to ``out``; returns an exit status."""
    try:
        report = HANDLERS[config.mode](config)
    except LandenError as exc:
        err.write(f"landen {config.mode}: {type(exc).__name__}: {exc}\n")
        return 1
    out.write(render(report, config.format))
    return 0 if report.ok else 1


# ---------------------------------------------------------------- parsing


def read_config_file(path: str) -> Dict[str, str]:
    values: Dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="convergence / accuracy tolerance")
    common.add_argument("--max-iter", type=int, dest="max_iter", help="iteration cap")
    common.add_argument("--format", choices=FORMATS, help="output format (default text)")
    common.add_argument("--backend", choices=BACKENDS, help="float (default) or rational")
    common.add_argument("--config", help="key=value settings file")

    parser = argparse.ArgumentParser(
        prog="landen", description="Integrals by rational and classical Landen transformations."
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    for name, help_text in (
        ("eval-quad", "evaluate int dx/(ax^2+bx+c) by iteration"),
        ("trace-quad", "print the Landen orbit of (a, b, c)"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--c", required=True)
        if name == "trace-quad":
            p.add_argument("--iters", type=int, help="fixed number of steps instead of --tol")

    p = sub.add_parser("agm", parents=[common], help="arithmetic-geometric mean of a and b")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)

    p = sub.add_parser("elliptic", parents=[common], help="G(a, b) = pi / (2 AGM(a, b))")
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--k", type=float, help="modulus; evaluates K(k) with a = 1")

    sub.add_parser("lemniscate", parents=[common], help="1/AGM(1, sqrt 2) against the lemniscate integral")

    p = sub.add_parser("degree6", parents=[common], help="iterate the x^6 + a x^4 + b x^2 + 1 parameters")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", action="append", help="suite name or 'all' (repeatable)")
    return parser


_SETTINGS = ("tol", "max_iter", "format", "backend", "config")


def config_from_args(
    ns: argparse.Namespace, environ: Optional[Mapping[str, str]] = None
) -> RunConfig:
    environ = os.environ if environ is None else environ
    file_values = read_config_file(ns.config) if ns.config else {}
    mode = ns.mode

    def pick(key: str, default: Any, cast: Any) -> Any:
        flag = getattr(ns, key, None)
        if flag is not None:
            return flag
        env_key = ENV_KEYS.get(key)
        if env_key and environ.get(env_key):
            return cast(environ[env_key])
        if key in file_values:
            return cast(file_values[key])
        return default

    try:
        tol = pick("tol", DEFAULT_TOL[mode], float)
        max_iter = pick("max_iter", DEFAULT_MAX_ITER.get(mode, ql.DEFAULT_MAX_ITER), int)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    params = {k: v for k, v in vars(ns).items() if k not in _SETTINGS and k != "mode"}
    if mode == "elliptic" and params.get("k") is None and (params.get("a") is None or params.get("b") is None):
        raise ConfigError("elliptic needs --k or both --a and --b")
    return RunConfig(
        mode=mode,
        params=params,
        tol=tol,
        max_iter=max_iter,
        format=pick("format", "text", str),
        backend=pick("backend", "float", str),
    )


def main(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = config_from_args(ns)
    except (ConfigError, OSError) as exc:
        err.write(f"landen: {exc}\n")
        return 2
    return run(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
