"""Slow reference evaluator for mu and its incomplete variants.

Shares no quadrature code with ``quad``: a fixed-step composite Simpson
rule, extrapolated over the steps h, h/2, h/4. The range is taken in
u = log t below t = 1 and in t above it, and stops at T = 300. The piece
(0, delta) is replaced by its leading term phi(0) delta^(beta+1) / (beta+1),
where phi(t) = integrand / t^beta, and delta is halved until that
approximation's bound is negligible.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np
from scipy import special

from .quad import EvalResult
from .volterra import VolterraParams

T_MAX = 300.0
H0 = 1.0 / 32.0
TARGET = 1e-10

GOLDEN_COLUMNS = ("function", "x", "alpha", "beta", "s", "value", "bound")
GOLDEN_PATH = Path(__file__).with_name("data") / "golden.csv"


def _log_phi(p: VolterraParams, t: np.ndarray) -> np.ndarray:
    # log of x^(t+alpha) / (Gamma(t+alpha+1) Gamma(beta+1))
    return ((t + p.alpha) * math.log(p.x) - special.gammaln(t + p.alpha + 1.0)
            - special.gammaln(p.beta + 1.0))


def _simpson(f, a: float, b: float, n: int) -> float:
    u = np.linspace(a, b, n + 1)
    y = f(u)
    step = (b - a) / n
    return step / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def _richardson(f, a: float, b: float) -> tuple[float, float]:
    # panel counts must halve exactly for the extrapolation weights to apply
    n = max(2, 2 * math.ceil((b - a) / (2.0 * H0)))
    s1, s2, s4 = (_simpson(f, a, b, k * n) for k in (1, 2, 4))
    r1 = s2 + (s2 - s1) / 15.0
    r2 = s4 + (s4 - s2) / 15.0
    best = r2 + (r2 - r1) / 63.0
    return best, abs(best - r1) + 1e-15 * abs(best)


def oracle_mu(p: VolterraParams, s_lower: float = 0.0, s_upper: float = math.inf) -> EvalResult:
    """Reference value of int_{s_lower}^{s_upper} of the mu integrand."""
    if not (0.0 <= s_lower <= s_upper):
        raise ValueError(f"need 0 <= s_lower <= s_upper, got {s_lower}, {s_upper}")
    if s_lower == s_upper:
        return EvalResult(0.0, 0.0, 0)
    a = p.beta + 1.0
    top = min(s_upper, T_MAX)
    value = 0.0
    bound = 0.0
    nodes = 0

    def in_u(u):
        t = np.exp(u)
        return np.exp(_log_phi(p, t) + a * u)

    def in_t(t):
        return np.exp(_log_phi(p, t) + p.beta * np.log(t))

    lo = s_lower
    if s_lower == 0.0:
        phi0 = math.exp(float(_log_phi(p, np.array(0.0))))
        delta = min(1e-3, top)
        while True:
            phid = math.exp(float(_log_phi(p, np.array(delta))))
            # |int_0^delta t^beta (phi - phi0)| <= sup|phi'| delta^(beta+2) / (beta+2)
            lead_err = 2.0 * abs(phid - phi0) * delta ** a / (a + 1.0)
            if lead_err <= 1e-3 * TARGET or delta < 1e-300:
                break
            delta *= 0.5
        value += phi0 * delta ** a / a
        bound += lead_err
        lo = delta
    # log variable below t = 1, plain t above
    for f, a_, b_ in ((in_u, math.log(lo), math.log(min(top, 1.0))),
                      (in_t, max(lo, 1.0), top)):
        if b_ > a_:
            body, err = _richardson(f, a_, b_)
            value += body
            bound += err
            nodes += 7 * max(2, math.ceil((b_ - a_) / H0))
    if s_upper > T_MAX:
        # the integrand falls by more than half per unit step past T_MAX
        bound += 2.0 * float(in_u(np.array(math.log(T_MAX))))
    return EvalResult(value, bound, nodes)


def golden_rows() -> list[dict]:
    """Reference values minted by the oracle; the rows written to golden.csv."""
    cases = [
        ("mu", 1.0, 0.0, 0.0, 0.0),
        ("mu", 1.0, 1.0, 0.0, 0.0),
        ("mu", 0.5, 2.0, 1.0, 0.0),
        ("mu", 2.0, -0.5, -0.5, 0.0),
        ("mu", 5.0, 3.0, 2.5, 0.0),
        ("mu-lower", 1.0, 0.0, 0.0, 1.0),
        ("mu-lower", 0.5, 2.0, 1.0, 1.3),
        ("mu-upper", 0.5, 2.0, 1.0, 1.3),
        ("mu-upper", 1.0, 0.0, -0.5, 2.0),
    ]
    rows = []
    for fid, x, alpha, beta, s in cases:
        p = VolterraParams(x, alpha, beta)
        if fid == "mu":
            res = oracle_mu(p)
        elif fid == "mu-lower":
            res = oracle_mu(p, 0.0, s)
        else:
            res = oracle_mu(p, s, math.inf)
        rows.append(dict(function=fid, x=x, alpha=alpha, beta=beta, s=s,
                         value=res.value, bound=res.abs_error_bound))
    return rows


def write_golden(path: Path | str = GOLDEN_PATH) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        fh.write("# golden values v1: oracle composite Simpson + Richardson, T=300\n")
        writer = csv.DictWriter(fh, fieldnames=GOLDEN_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in golden_rows():
            writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
    return path


def read_golden(path: Path | str = GOLDEN_PATH) -> list[dict]:
    with Path(path).open() as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    rows = []
    for rec in csv.DictReader(lines):
        rows.append({k: (v if k == "function" else float(v)) for k, v in rec.items()})
    return rows
