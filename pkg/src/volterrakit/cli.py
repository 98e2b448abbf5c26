"""Command-line frontend: ``volterra {eval,table,verify,golden}``.

Exit codes: 0 success, 1 at least one inequality failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from typing import Callable

from . import grids, ineqlab, oracle
from . import volterra as V
from .errors import DomainError, PrecisionLossError
from .means import PowerMeanOrder, power_mean
from .quad import DEFAULT_TOL, EvalResult
from .volterra import VolterraParams

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INT_PARAMS = {"n", "order"}
STR_PARAMS = {"betas", "check"}


def fmt(v) -> str:
    """Round-trip decimal text for floats; ints and strings unchanged."""
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    return str(v)


def parse_value(name: str, text: str):
    text = text.strip()
    if name in STR_PARAMS:
        return text
    if name in INT_PARAMS:
        f = float(text)
        return int(f) if f.is_integer() else f
    if name == "r":
        return float(PowerMeanOrder.parse(text))
    return float(text)


def default_tol() -> float:
    raw = os.environ.get("VOLTERRA_TOL")
    return float(raw) if raw else DEFAULT_TOL


# --------------------------------------------------------------------------
# function table for eval / table


def _p(a) -> VolterraParams:
    return VolterraParams(a["x"], a.get("alpha", 0.0), a.get("beta", 0.0))


def _power_mean(a, tol) -> EvalResult:
    return EvalResult(power_mean(a["r"], a["x"], a["y"], a["lambda"]), 0.0, 0)


FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "nu": (("x",), lambda a, tol: V.nu(a["x"], tol)),
    "nu-alpha": (("x", "alpha"), lambda a, tol: V.nu_alpha(a["x"], a["alpha"], tol)),
    "mu-beta": (("x", "beta"), lambda a, tol: V.mu_beta(a["x"], a["beta"], tol)),
    "mu": (("x", "alpha", "beta"), lambda a, tol: V.mu(_p(a), tol)),
    "mu-upper": (("x", "alpha", "beta", "s"), lambda a, tol: V.mu_upper(_p(a), a["s"], tol)),
    "mu-lower": (("x", "alpha", "beta", "s"), lambda a, tol: V.mu_lower(_p(a), a["s"], tol)),
    "g": (("x", "alpha", "beta", "s"), lambda a, tol: V.g(_p(a), a["s"], tol)),
    "g-star": (("x", "alpha", "beta", "s"), lambda a, tol: V.g_star(_p(a), a["s"], tol)),
    "f-deriv": (("n", "x", "alpha", "beta"),
                lambda a, tol: V.f_derivative(a["n"], _p(a), tol)),
    "k-beta": (("x", "alpha", "beta"), lambda a, tol: V.k_beta(_p(a), tol)),
    "nu-neg": (("x",), lambda a, tol: V.nu_neg(a["x"], tol)),
    "nu-neg-complement": (("x",), lambda a, tol: V.nu_neg_complement(a["x"], tol)),
    "power-mean": (("r", "x", "y", "lambda"), _power_mean),
}
# parameters that may be omitted on the command line
FUNCTION_DEFAULTS = {"alpha": 0.0, "beta": 0.0, "n": 0}


def evaluate(function: str, args: dict, tol: float) -> EvalResult:
    names, fn = FUNCTIONS[function]
    full = {}
    for name in names:
        if name in args:
            full[name] = args[name]
        elif name in FUNCTION_DEFAULTS:
            full[name] = FUNCTION_DEFAULTS[name]
        else:
            raise DomainError(f"{function} requires --{name}")
    return fn(full, tol)


# --------------------------------------------------------------------------
# argument parsing

PARAM_FLAGS = ("x", "y", "alpha", "beta", "s", "s2", "n", "lambda", "r", "m", "delta",
               "beta1", "beta2", "beta3", "betas", "order", "h")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_param_flags(p: argparse.ArgumentParser, lists: bool):
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", dest=f"param_{name}", metavar="V[,V...]" if lists else "V")
    p.add_argument("--tol", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="volterra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=sorted(FUNCTIONS))
    _add_param_flags(ev, lists=False)

    tb = sub.add_parser("table", help="tabulate a function over a grid")
    tb.add_argument("function", choices=sorted(FUNCTIONS))
    _add_param_flags(tb, lists=True)
    tb.add_argument("--grid", help="CSV file whose header names the parameters")
    tb.add_argument("--format", choices=("csv", "json"), default="csv")

    vf = sub.add_parser("verify", help="run inequality checks, CSV report on stdout")
    vf.add_argument("checks", nargs="*", help="check ids (default: every check in the grid)")
    _add_param_flags(vf, lists=True)
    vf.add_argument("--grid", help="CSV file of points; an optional 'check' column routes rows")
    vf.add_argument("--parallel", type=int, default=1)
    vf.add_argument("--list", action="store_true", help="list check ids and exit")

    gd = sub.add_parser("golden", help="regenerate the oracle golden-value file")
    gd.add_argument("--out", default=str(oracle.GOLDEN_PATH))
    return parser


def _flag_values(ns, lists: bool) -> dict:
    out = {}
    for name in PARAM_FLAGS:
        raw = getattr(ns, f"param_{name}")
        if raw is None:
            continue
        try:
            if lists and name != "betas":
                out[name] = [parse_value(name, t) for t in raw.split(",")]
            elif lists:
                out[name] = [parse_value(name, raw)]
            else:
                out[name] = parse_value(name, raw)
        except ValueError as exc:
            raise UsageError(f"--{name}: {exc}") from None
    return out


def _read_grid(path: str) -> list[dict]:
    try:
        with open(path, newline="") as fh:
            lines = [ln for ln in fh if not ln.startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read grid file: {exc}") from None
    rows = []
    for rec in csv.DictReader(lines):
        try:
            rows.append({k.strip(): parse_value(k.strip(), v) for k, v in rec.items()
                         if k is not None and v not in (None, "")})
        except ValueError as exc:
            raise UsageError(f"grid file {path}: {exc}") from None
    return rows


# --------------------------------------------------------------------------
# commands


def cmd_eval(ns, out) -> int:
    res = evaluate(ns.function, _flag_values(ns, lists=False), ns.tol or default_tol())
    out.write(f"{fmt(res.value)},{fmt(res.abs_error_bound)}\n")
    return EXIT_OK


def _table_rows(ns) -> list[dict]:
    names = FUNCTIONS[ns.function][0]
    if ns.grid:
        return _read_grid(ns.grid)
    flags = _flag_values(ns, lists=True)
    used = [n for n in names if n in flags]
    return [dict(zip(used, combo)) for combo in itertools.product(*(flags[n] for n in used))]


def cmd_table(ns, out) -> int:
    names = FUNCTIONS[ns.function][0]
    tol = ns.tol or default_tol()
    columns = list(names) + ["value", "abs_error_bound"]
    records = []
    for row in _table_rows(ns):
        res = evaluate(ns.function, row, tol)
        rec = {n: row.get(n, FUNCTION_DEFAULTS.get(n)) for n in names}
        rec.update(value=res.value, abs_error_bound=res.abs_error_bound)
        records.append(rec)
    if ns.format == "json":
        # json has no infinity literal; keep the same text as the CSV
        enc = [{k: (fmt(v) if isinstance(v, float) and math.isinf(v) else v)
                for k, v in rec.items()} for rec in records]
        out.write(json.dumps(enc) + "\n")
    else:
        out.write(",".join(columns) + "\n")
        for rec in records:
            out.write(",".join(fmt(rec[c]) for c in columns) + "\n")
    return EXIT_OK


def verify_columns(checks) -> list[str]:
    used = {p for c in checks for p in ineqlab.CHECKS[c].params}
    return ["check"] + [p for p in ineqlab.PARAM_ORDER if p in used] + [
        "lhs", "rhs", "margin", "combined_error", "verdict"]


def cmd_verify(ns, out, err) -> int:
    if ns.list:
        for cid, c in ineqlab.CHECKS.items():
            out.write(f"{cid}\t{c.description}\n")
        return EXIT_OK
    unknown = [c for c in ns.checks if c not in ineqlab.CHECKS]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    if ns.parallel < 1:
        raise UsageError("--parallel must be >= 1")
    flags = _flag_values(ns, lists=True)
    if ns.grid:
        grid = _read_grid(ns.grid)
    elif flags:
        grid = ineqlab.GridSpec(flags)
    else:
        grid = grids.acceptance_union()
    checks = list(ns.checks)
    if not checks:
        if isinstance(grid, ineqlab.GridSpec):
            raise UsageError("name at least one check when sweeping flag grids")
        tagged = list(dict.fromkeys(r.get("check") for r in grid))
        checks = [c for c in tagged if c] or list(ineqlab.CHECKS)
    columns = verify_columns(checks)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    counts = {ineqlab.HOLDS: 0, ineqlab.FAILS: 0, ineqlab.INCONCLUSIVE: 0}
    for rep in ineqlab.iter_sweep(grid, checks, ns.tol or default_tol(), ns.parallel):
        counts[rep.verdict] += 1
        row = {"check": rep.name, **rep.params, "lhs": rep.lhs, "rhs": rep.rhs,
               "margin": rep.margin, "combined_error": rep.combined_error,
               "verdict": rep.verdict}
        writer.writerow([fmt(row[c]) if c in row else "" for c in columns])
    total = sum(counts.values())
    err.write(f"{total} reports: {counts[ineqlab.HOLDS]} holds, "
              f"{counts[ineqlab.INCONCLUSIVE]} inconclusive, {counts[ineqlab.FAILS]} fails\n")
    return EXIT_FAIL if counts[ineqlab.FAILS] else EXIT_OK


def cmd_golden(ns, out) -> int:
    path = oracle.write_golden(ns.out)
    out.write(f"wrote {path}\n")
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "eval":
            return cmd_eval(ns, out)
        if ns.command == "table":
            return cmd_table(ns, out)
        if ns.command == "verify":
            return cmd_verify(ns, out, err)
        return cmd_golden(ns, out)
    except (UsageError, DomainError, PrecisionLossError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def run(argv) -> tuple[int, str, str]:
    """Invoke the CLI in-process and capture (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
