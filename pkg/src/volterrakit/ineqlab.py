"""Inequality lab: evaluates each proved inequality at concrete parameters.

Every check returns ``InequalityReport`` objects whose ``margin`` is
oriented so that margin >= 0 means the inequality holds. ``combined_error``
is the first-order propagation of the operands' quadrature error bounds, and
the verdict is ``inconclusive`` whenever |margin| <= combined_error.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import volterra as V
from .errors import DomainError, PrecisionLossError
from .gammakit import Z_STAR
from .means import power_mean
from .quad import DEFAULT_TOL, EvalResult
from .volterra import VolterraParams

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"

_EPS = np.finfo(float).eps

# canonical parameter order for tabular output
PARAM_ORDER = ("x", "y", "alpha", "beta", "s", "s2", "n", "lambda", "r", "m", "delta",
               "beta1", "beta2", "beta3", "betas", "order", "h")

DEFAULT_BETAS = (-0.5, 0.0, 0.5, 1.0, 2.0)


def verdict_for(margin: float, combined_error: float) -> str:
    if math.isnan(margin):
        return INCONCLUSIVE
    if margin < -combined_error:
        return FAILS
    if margin > combined_error:
        return HOLDS
    return INCONCLUSIVE


@dataclass(frozen=True)
class InequalityReport:
    name: str
    params: Mapping[str, object]
    lhs: float
    rhs: float
    margin: float
    combined_error: float
    verdict: str = field(default="")

    def __post_init__(self):
        if not self.verdict:
            object.__setattr__(self, "verdict", verdict_for(self.margin, self.combined_error))

    @property
    def failed(self) -> bool:
        return self.verdict == FAILS


def _report(name, params, lhs, rhs, err) -> InequalityReport:
    return InequalityReport(name, dict(params), float(lhs), float(rhs), float(rhs - lhs),
                            float(err))


def _prod_err(a: EvalResult, b: EvalResult) -> float:
    return (abs(a.value) * b.abs_error_bound + abs(b.value) * a.abs_error_bound
            + a.abs_error_bound * b.abs_error_bound)


def _sq_err(a: EvalResult) -> float:
    return 2.0 * abs(a.value) * a.abs_error_bound + a.abs_error_bound ** 2


# --------------------------------------------------------------------------
# individual checks


def check_geometric_convexity(x: float, y: float, lam: float, alpha: float = 0.0,
                              beta: float = 0.0, tol: float = DEFAULT_TOL) -> InequalityReport:
    """mu(x^lam y^(1-lam)) <= mu(x)^lam mu(y)^(1-lam)."""
    if not (x > 0 and y > 0):
        raise DomainError("geometric convexity needs x, y > 0")
    if not 0 <= lam <= 1:
        raise DomainError(f"lambda must lie in [0, 1], got {lam}")
    if lam == 1 or x == y:
        point = x
    elif lam == 0:
        point = y
    else:
        point = x ** lam * y ** (1.0 - lam)
    mx = V.mu(VolterraParams(x, alpha, beta), tol)
    my = V.mu(VolterraParams(y, alpha, beta), tol)
    mp = V.mu(VolterraParams(point, alpha, beta), tol)
    rhs = mx.value if x == y else mx.value ** lam * my.value ** (1.0 - lam)
    rhs_err = rhs * (lam * mx.abs_error_bound / mx.value
                     + (1.0 - lam) * my.abs_error_bound / my.value)
    params = dict(x=x, y=y, alpha=alpha, beta=beta)
    params["lambda"] = lam
    return _report("geometric-convexity", params, mp.value, rhs,
                   mp.abs_error_bound + rhs_err)


def check_turan_alpha(p: VolterraParams, tol: float = DEFAULT_TOL) -> InequalityReport:
    """mu(x,beta,alpha+1)^2 - mu(x,beta,alpha) mu(x,beta,alpha+2) >= 0."""
    m0, m1, m2 = (V.mu(p.replace(alpha=p.alpha + k), tol) for k in range(3))
    return _report("turan-alpha", dict(x=p.x, alpha=p.alpha, beta=p.beta),
                   m0.value * m2.value, m1.value ** 2, _sq_err(m1) + _prod_err(m0, m2))


def check_turan_beta_bounds(p: VolterraParams, tol: float = DEFAULT_TOL
                            ) -> tuple[InequalityReport, InequalityReport]:
    """0 <= mu_{b+1}^2 - mu_b mu_{b+2} <= mu_{b+1}^2 / (b+2), all at (x, alpha)."""
    m0, m1, m2 = (V.mu(p.replace(beta=p.beta + k), tol) for k in range(3))
    params = dict(x=p.x, alpha=p.alpha, beta=p.beta)
    sq, sq_err = m1.value ** 2, _sq_err(m1)
    diff_err = sq_err + _prod_err(m0, m2)
    lower = _report("turan-beta-lower", params, m0.value * m2.value, sq, diff_err)
    upper = _report("turan-beta-upper", params, sq - m0.value * m2.value,
                    sq / (p.beta + 2.0), diff_err + sq_err / (p.beta + 2.0))
    return lower, upper


def check_kimberling(x: float, y: float, tol: float = DEFAULT_TOL
                     ) -> tuple[InequalityReport, InequalityReport]:
    """f(x) f(y) <= f(x+y) for f = nu_neg_complement, and its expanded nu(-x) form."""
    if not (x > 0 and y > 0):
        raise DomainError("the Kimberling check needs x, y > 0")
    fx, fy, fxy = (V.nu_neg_complement(v, tol) for v in (x, y, x + y))
    params = dict(x=x, y=y)
    kim = _report("kimberling", params, fx.value * fy.value, fxy.value,
                  _prod_err(fx, fy) + fxy.abs_error_bound)
    ex, ey = math.exp(-x), math.exp(-y)
    nx, ny, nxy = ex - fx.value, ey - fy.value, math.exp(-x - y) - fxy.value
    lhs = nx * ny + nxy
    rhs = ex * ny + ey * nx
    err = (abs(ny) * fx.abs_error_bound + abs(nx) * fy.abs_error_bound
           + fx.abs_error_bound * fy.abs_error_bound + fxy.abs_error_bound
           + ex * fy.abs_error_bound + ey * fx.abs_error_bound)
    # both forms are algebraically identical; the floor covers the rounding of the expansion
    err += 8.0 * _EPS * (abs(nx * ny) + abs(nxy) + ex + ey)
    expanded = _report("kimberling-expanded", params, lhs, rhs, err)
    return kim, expanded


def _odd_order(n) -> int:
    if int(n) != n or n < 1 or int(n) % 2 == 0:
        raise DomainError(f"n must be an odd integer >= 1, got {n}")
    return int(n)


def delta_n(n: int, p: VolterraParams, tol: float = DEFAULT_TOL
            ) -> tuple[float, float, float]:
    """(D_{n-1} D_{n+1}, D_n^2, error bound of their difference)."""
    lo, mid, hi = (V.f_derivative(k, p, tol) for k in (n - 1, n, n + 1))
    return lo.value * hi.value, mid.value ** 2, _prod_err(lo, hi) + _sq_err(mid)


def check_delta_n(n: int, p: VolterraParams, tol: float = DEFAULT_TOL) -> InequalityReport:
    """D_{n-1} D_{n+1} - D_n^2 >= 0 for odd n, D_k the beta-derivatives of Gamma(b+1) mu."""
    n = _odd_order(n)
    rhs, lhs, err = delta_n(n, p, tol)
    return _report("delta-n", dict(n=n, x=p.x, alpha=p.alpha, beta=p.beta), lhs, rhs, err)


def check_schur(n: int, p: VolterraParams, beta1: float, beta2: float, beta3: float,
                tol: float = DEFAULT_TOL) -> InequalityReport:
    """sum over i of (b_i - b_j)(b_i - b_k) Delta_n(b_i) >= 0."""
    n = _odd_order(n)
    betas = (beta1, beta2, beta3)
    if min(betas) <= -1:
        raise DomainError("Schur check needs every beta > -1")
    total = 0.0
    err = 0.0
    for i, bi in enumerate(betas):
        bj, bk = (b for j, b in enumerate(betas) if j != i)
        coef = (bi - bj) * (bi - bk)
        if coef == 0.0:
            continue
        rhs, lhs, e = delta_n(n, p.replace(beta=bi), tol)
        total += coef * (rhs - lhs)
        err += abs(coef) * e
    params = dict(n=n, x=p.x, alpha=p.alpha, beta1=beta1, beta2=beta2, beta3=beta3)
    return _report("schur", params, 0.0, total, err)


LOGCONCAVE_TARGETS = ("mu_in_beta", "mu_in_alpha", "g_in_beta", "g_star_in_beta")
_TARGET_IDS = {
    "mu_in_beta": "logconcave-mu-beta",
    "mu_in_alpha": "logconcave-mu-alpha",
    "g_in_beta": "logconcave-g-beta",
    "g_star_in_beta": "logconcave-g-star-beta",
}


def g_hypotheses(x: float, alpha: float, s: float, threshold_on: str = "alpha") -> bool:
    """0 < x < 1, s > 0 and alpha > z* (or s > z*, or both)."""
    base = 0 < x < 1 and s > 0
    if threshold_on == "alpha":
        return base and alpha > Z_STAR
    if threshold_on == "s":
        return base and s > Z_STAR and alpha > -1
    if threshold_on == "both":
        return base and alpha > Z_STAR and s > Z_STAR
    raise ValueError(f"unknown threshold_on {threshold_on!r}")


def _midpoint_report(name, params, f, m, delta) -> InequalityReport:
    if delta < 0:
        raise DomainError("delta must be >= 0")
    mid = f(m)
    if delta == 0:
        lo = hi = mid
    else:
        lo, hi = f(m - delta), f(m + delta)
    return _report(name, params, lo.value * hi.value, mid.value ** 2,
                   _prod_err(lo, hi) + _sq_err(mid))


def check_logconcavity(target: str, m: float, delta: float, x: float, *,
                       alpha: float = 0.0, beta: float = 0.0, s: float = 0.0,
                       threshold_on: str = "alpha", enforce: bool = True,
                       tol: float = DEFAULT_TOL) -> InequalityReport:
    """Midpoint log-concavity f(m)^2 >= f(m - delta) f(m + delta).

    ``target`` selects beta -> mu, alpha -> mu, beta -> G or beta -> G*;
    ``m`` is the varied parameter and the remaining ones are fixed.
    """
    if target not in LOGCONCAVE_TARGETS:
        raise DomainError(f"unknown log-concavity target {target!r}")
    if m - delta <= -1:
        raise DomainError(f"m - delta must exceed -1, got {m - delta}")
    params = dict(x=x)
    if target == "mu_in_beta":
        params.update(alpha=alpha, m=m, delta=delta)
        f = lambda b: V.mu(VolterraParams(x, alpha, b), tol)  # noqa: E731
    elif target == "mu_in_alpha":
        params.update(beta=beta, m=m, delta=delta)
        f = lambda a: V.mu(VolterraParams(x, a, beta), tol)  # noqa: E731
    else:
        if enforce and not g_hypotheses(x, alpha, s, threshold_on):
            raise DomainError(
                f"log-concavity of G needs 0<x<1, s>0 and {threshold_on} > z*; "
                f"got x={x}, alpha={alpha}, s={s}")
        params.update(alpha=alpha, s=s, m=m, delta=delta)
        fn = V.g if target == "g_in_beta" else V.g_star
        f = lambda b: fn(VolterraParams(x, alpha, b), s, tol)  # noqa: E731
    return _midpoint_report(_TARGET_IDS[target], params, f, m, delta)


def check_logconvexity_H(x: float, alpha: float, m: float, delta: float,
                         tol: float = DEFAULT_TOL) -> InequalityReport:
    """H(m-d) H(m+d) >= H(m)^2 for H(beta) = Gamma(beta+1) mu(x, beta, alpha).

    At m - d = -1 the integral defining H diverges to +inf and the
    inequality holds in the extended reals; that case is reported with an
    infinite rhs.
    """
    if delta < 0:
        raise DomainError("delta must be >= 0")
    if m - delta < -1:
        raise DomainError(f"m - delta must be >= -1, got {m - delta}")
    params = dict(x=x, alpha=alpha, m=m, delta=delta)
    H = lambda b: V.f_derivative(0, VolterraParams(x, alpha, b), tol)  # noqa: E731
    if m - delta == -1:
        mid = H(m)
        return InequalityReport("logconvex-h", params, mid.value ** 2, math.inf, math.inf,
                                _sq_err(mid), HOLDS)
    report = _midpoint_report("logconvex-h", params, H, m, delta)
    # the midpoint report measures concavity; flip it for convexity
    return _report(report.name, report.params, report.rhs, report.lhs, report.combined_error)


CM_TARGETS = ("mu_recip_x", "nu_neg_complement", "exp")
_CM_IDS = {"mu_recip_x": "cm-mu-recip", "nu_neg_complement": "cm-nu-neg-complement",
           "exp": "cm-exp"}
MAX_CM_ORDER = 6


def check_complete_monotonicity(target: str, xs: Iterable[float], order: int = 4,
                                h: float = 0.1, *, alpha: float = 0.0, beta: float = 0.0,
                                tol: float = DEFAULT_TOL) -> list[InequalityReport]:
    """(-1)^n Delta_h^n f(x) >= 0 for n = 0..order at every x (forward differences)."""
    if target not in CM_TARGETS:
        raise DomainError(f"unknown complete-monotonicity target {target!r}")
    if not (0 <= order <= MAX_CM_ORDER and int(order) == order):
        raise DomainError(f"order must be an integer in [0, {MAX_CM_ORDER}], got {order}")
    if not h > 0:
        raise DomainError("step h must be positive")
    if target == "mu_recip_x" and alpha < 0:
        raise DomainError("complete monotonicity of x -> mu(1/x) needs alpha >= 0")
    order = int(order)

    def f(v: float) -> EvalResult:
        if target == "mu_recip_x":
            return V.mu(VolterraParams(1.0 / v, alpha, beta), tol)
        if target == "nu_neg_complement":
            return V.nu_neg_complement(v, tol)
        val = math.exp(-v)
        return EvalResult(val, _EPS * val, 1)

    reports = []
    for x in xs:
        if not x > 0:
            raise DomainError(f"sample points must be > 0, got {x}")
        vals = [f(x + k * h) for k in range(order + 1)]
        for n in range(order + 1):
            diff = 0.0
            err = 0.0
            for k in range(n + 1):
                c = math.comb(n, k)
                diff += (-1) ** (n - k) * c * vals[k].value
                err += c * vals[k].abs_error_bound
            params = dict(x=x, order=n, h=h)
            if target == "mu_recip_x":
                params.update(alpha=alpha, beta=beta)
            reports.append(_report(_CM_IDS[target], params, 0.0, (-1) ** n * diff, err))
    return reports


def _mean_err(r: float, a: EvalResult, b: EvalResult, lam: float, mean: float) -> float:
    if math.isinf(r):
        return max(a.abs_error_bound, b.abs_error_bound)
    # dM/dx1 = lam (x1 / M)^(r - 1), likewise for x2
    da = lam * (a.value / mean) ** (r - 1.0)
    db = (1.0 - lam) * (b.value / mean) ** (r - 1.0)
    return da * a.abs_error_bound + db * b.abs_error_bound


def check_g_power_mean(which: str, r: float, beta1: float, beta2: float, lam: float,
                       x: float, alpha: float, s: float, *, enforce: bool = True,
                       tol: float = DEFAULT_TOL) -> InequalityReport:
    """Power-mean bounds for G (which='g') or G* (which='g_star').

    r <= 0: lower bound M_r(G_b1, G_b2; lam) <= G_{lam b1 + (1-lam) b2}.
    r = +inf: upper bound G_{lam b1 + (1-lam) b2} <= max(G_b1, G_b2).
    Finite r > 0 is evaluated in lower-bound mode for exploration only.
    """
    if which not in ("g", "g_star"):
        raise DomainError(f"which must be 'g' or 'g_star', got {which!r}")
    r = float(r)
    if not 0 < lam < 1:
        raise DomainError(f"lambda must lie in (0, 1), got {lam}")
    if min(beta1, beta2) <= -1:
        raise DomainError("beta1, beta2 must exceed -1")
    if enforce and r <= 0 and not g_hypotheses(x, alpha, s):
        raise DomainError("the r <= 0 bound is checked under 0<x<1, s>0, alpha>z*")
    fn = V.g if which == "g" else V.g_star
    bmid = beta1 if beta1 == beta2 else lam * beta1 + (1.0 - lam) * beta2
    g1 = fn(VolterraParams(x, alpha, beta1), s, tol)
    g2 = fn(VolterraParams(x, alpha, beta2), s, tol)
    gm = fn(VolterraParams(x, alpha, bmid), s, tol)
    mean = power_mean(r, g1.value, g2.value, lam)
    err = gm.abs_error_bound + _mean_err(r, g1, g2, lam, mean)
    name = "power-mean-g" if which == "g" else "power-mean-g-star"
    params = dict(x=x, alpha=alpha, s=s, r=r, beta1=beta1, beta2=beta2)
    params["lambda"] = lam
    if r == math.inf:
        return _report(name, params, gm.value, mean, err)
    return _report(name, params, mean, gm.value, err)


def check_g_monotone_beta(x: float, alpha: float, s: float,
                          betas: Sequence[float] = DEFAULT_BETAS,
                          tol: float = DEFAULT_TOL) -> tuple[InequalityReport, InequalityReport]:
    """G nondecreasing and G* nonincreasing in beta along ``betas``.

    Each report carries the consecutive pair closest to a violation.
    """
    betas = tuple(float(b) for b in betas)
    if len(betas) < 2:
        raise DomainError("need at least two beta values")
    if min(betas) <= -1:
        raise DomainError("every beta must exceed -1")
    pars = [VolterraParams(x, alpha, b) for b in betas]
    gs = [V.g(p, s, tol) for p in pars]
    gstars = [V.g_star(p, s, tol) for p in pars]
    params = dict(x=x, alpha=alpha, s=s, betas=";".join(repr(b) for b in betas))
    out = []
    for name, vals, increasing in (("monotone-beta-g", gs, True),
                                   ("monotone-beta-g-star", gstars, False)):
        worst = None
        for i in range(len(betas) - 1):
            a, b = (vals[i], vals[i + 1]) if betas[i + 1] > betas[i] else (vals[i + 1], vals[i])
            if not increasing:
                a, b = b, a
            err = a.abs_error_bound + b.abs_error_bound
            key = b.value - a.value + err
            if worst is None or key < worst[0]:
                worst = (key, a.value, b.value, err)
        _, lhs, rhs, err = worst
        out.append(_report(name, params, lhs, rhs, err))
    return out[0], out[1]


def check_subadditivity(x: float, alpha: float, beta: float, s: float, s2: float, *,
                        allow_negative_beta: bool = False, tol: float = DEFAULT_TOL
                        ) -> tuple[InequalityReport, InequalityReport]:
    """G(s) G(s') >= G(s + s') and the equivalent G* form."""
    if beta < 0 and not allow_negative_beta:
        raise DomainError("subadditivity is checked for beta >= 0 (pass allow_negative_beta)")
    if s < 0 or s2 < 0:
        raise DomainError("split points must be >= 0")
    p = VolterraParams(x, alpha, beta)
    g1, g2, g12 = (V.g(p, v, tol) for v in (s, s2, s + s2))
    h1, h2, h12 = (V.g_star(p, v, tol) for v in (s, s2, s + s2))
    params = dict(x=x, alpha=alpha, beta=beta, s=s, s2=s2)
    rep_g = _report("subadditivity-g", params, g12.value, g1.value * g2.value,
                    g12.abs_error_bound + _prod_err(g1, g2))
    err = (h12.abs_error_bound + h1.abs_error_bound + h2.abs_error_bound + _prod_err(h1, h2))
    rep_h = _report("subadditivity-g-star", params, h1.value + h2.value,
                    h12.value + h1.value * h2.value, err)
    return rep_g, rep_h


# --------------------------------------------------------------------------
# registry and sweeps


def _base_ok(pt: Mapping) -> bool:
    return (pt.get("x", 1.0) > 0 and pt.get("alpha", 0.0) > -1 and pt.get("beta", 0.0) > -1)


def _vp(pt) -> VolterraParams:
    return VolterraParams(pt["x"], pt.get("alpha", 0.0), pt.get("beta", 0.0))


def _is_odd(n) -> bool:
    return float(n).is_integer() and n >= 1 and int(n) % 2 == 1


def _betas(pt) -> tuple[float, ...]:
    raw = pt.get("betas", DEFAULT_BETAS)
    if isinstance(raw, str):
        return tuple(float(b) for b in raw.split(";") if b.strip())
    return tuple(raw)


@dataclass(frozen=True)
class CheckDef:
    id: str
    params: tuple[str, ...]
    defaults: Mapping[str, object]
    hypothesis: Callable[[Mapping], bool]
    run: Callable[[Mapping, float], Sequence[InequalityReport]]
    description: str = ""


def _one(rep):
    return [rep]


CHECKS: dict[str, CheckDef] = {c.id: c for c in [
    CheckDef(
        "geometric-convexity", ("x", "y", "lambda", "alpha", "beta"),
        {"alpha": 0.0, "beta": 0.0},
        lambda pt: _base_ok(pt) and pt["y"] > 0 and 0 <= pt["lambda"] <= 1,
        lambda pt, tol: _one(check_geometric_convexity(
            pt["x"], pt["y"], pt["lambda"], pt["alpha"], pt["beta"], tol)),
        "mu(x^l y^(1-l)) <= mu(x)^l mu(y)^(1-l)"),
    CheckDef(
        "turan-alpha", ("x", "alpha", "beta"), {},
        _base_ok,
        lambda pt, tol: _one(check_turan_alpha(_vp(pt), tol)),
        "mu(alpha+1)^2 >= mu(alpha) mu(alpha+2)"),
    CheckDef(
        "turan-beta", ("x", "alpha", "beta"), {},
        _base_ok,
        lambda pt, tol: list(check_turan_beta_bounds(_vp(pt), tol)),
        "0 <= mu(b+1)^2 - mu(b) mu(b+2) <= mu(b+1)^2 / (b+2)"),
    CheckDef(
        "kimberling", ("x", "y"), {},
        lambda pt: pt["x"] > 0 and pt["y"] > 0,
        lambda pt, tol: list(check_kimberling(pt["x"], pt["y"], tol)),
        "f(x) f(y) <= f(x+y), f(x) = e^-x - nu(-x)"),
    CheckDef(
        "delta-n", ("n", "x", "alpha", "beta"), {"n": 1},
        lambda pt: _base_ok(pt) and _is_odd(pt["n"]),
        lambda pt, tol: _one(check_delta_n(int(pt["n"]), _vp(pt), tol)),
        "D_(n-1) D_(n+1) >= D_n^2 for odd n"),
    CheckDef(
        "schur", ("n", "x", "alpha", "beta1", "beta2", "beta3"), {"n": 1},
        lambda pt: (_base_ok(pt) and _is_odd(pt["n"])
                    and min(pt["beta1"], pt["beta2"], pt["beta3"]) > -1),
        lambda pt, tol: _one(check_schur(int(pt["n"]), _vp(pt), pt["beta1"], pt["beta2"],
                                         pt["beta3"], tol)),
        "Schur-type inequality for Delta_n"),
    CheckDef(
        "logconcave-mu-beta", ("x", "alpha", "m", "delta"), {},
        lambda pt: _base_ok(pt) and pt["delta"] >= 0 and pt["m"] - pt["delta"] > -1,
        lambda pt, tol: _one(check_logconcavity("mu_in_beta", pt["m"], pt["delta"], pt["x"],
                                                alpha=pt["alpha"], tol=tol)),
        "beta -> mu log-concave"),
    CheckDef(
        "logconcave-mu-alpha", ("x", "beta", "m", "delta"), {},
        lambda pt: _base_ok(pt) and pt["delta"] >= 0 and pt["m"] - pt["delta"] > -1,
        lambda pt, tol: _one(check_logconcavity("mu_in_alpha", pt["m"], pt["delta"], pt["x"],
                                                beta=pt["beta"], tol=tol)),
        "alpha -> mu log-concave"),
    CheckDef(
        "logconvex-h", ("x", "alpha", "m", "delta"), {},
        lambda pt: _base_ok(pt) and pt["delta"] >= 0 and pt["m"] - pt["delta"] >= -1,
        lambda pt, tol: _one(check_logconvexity_H(pt["x"], pt["alpha"], pt["m"], pt["delta"],
                                                  tol)),
        "beta -> Gamma(beta+1) mu log-convex"),
    CheckDef(
        "logconcave-g-beta", ("x", "alpha", "s", "m", "delta"), {},
        lambda pt: (g_hypotheses(pt["x"], pt["alpha"], pt["s"]) and pt["delta"] >= 0
                    and pt["m"] - pt["delta"] > -1),
        lambda pt, tol: _one(check_logconcavity("g_in_beta", pt["m"], pt["delta"], pt["x"],
                                                alpha=pt["alpha"], s=pt["s"], tol=tol)),
        "beta -> G log-concave (0<x<1, alpha>z*, s>0)"),
    CheckDef(
        "logconcave-g-star-beta", ("x", "alpha", "s", "m", "delta"), {},
        lambda pt: (g_hypotheses(pt["x"], pt["alpha"], pt["s"]) and pt["delta"] >= 0
                    and pt["m"] - pt["delta"] > -1),
        lambda pt, tol: _one(check_logconcavity("g_star_in_beta", pt["m"], pt["delta"],
                                                pt["x"], alpha=pt["alpha"], s=pt["s"],
                                                tol=tol)),
        "beta -> G* log-concave (0<x<1, alpha>z*, s>0)"),
    CheckDef(
        "cm-mu-recip", ("x", "alpha", "beta", "order", "h"), {"order": 4, "h": 0.1},
        lambda pt: (_base_ok(pt) and pt["alpha"] >= 0 and pt["h"] > 0
                    and 0 <= pt["order"] <= MAX_CM_ORDER),
        lambda pt, tol: check_complete_monotonicity(
            "mu_recip_x", [pt["x"]], int(pt["order"]), pt["h"], alpha=pt["alpha"],
            beta=pt["beta"], tol=tol),
        "x -> mu(1/x) completely monotone (alpha >= 0)"),
    CheckDef(
        "cm-nu-neg-complement", ("x", "order", "h"), {"order": 4, "h": 0.1},
        lambda pt: pt["x"] > 0 and pt["h"] > 0 and 0 <= pt["order"] <= MAX_CM_ORDER,
        lambda pt, tol: check_complete_monotonicity(
            "nu_neg_complement", [pt["x"]], int(pt["order"]), pt["h"], tol=tol),
        "x -> e^-x - nu(-x) completely monotone"),
    CheckDef(
        "cm-exp", ("x", "order", "h"), {"order": 4, "h": 0.1},
        lambda pt: pt["x"] > 0 and pt["h"] > 0 and 0 <= pt["order"] <= MAX_CM_ORDER,
        lambda pt, tol: check_complete_monotonicity(
            "exp", [pt["x"]], int(pt["order"]), pt["h"], tol=tol),
        "control: e^-x"),
    CheckDef(
        "power-mean-g", ("x", "alpha", "s", "beta1", "beta2", "lambda", "r"), {},
        lambda pt: (_base_ok(pt) and 0 < pt["lambda"] < 1
                    and min(pt["beta1"], pt["beta2"]) > -1
                    and (pt["r"] == math.inf
                         or (pt["r"] <= 0 and g_hypotheses(pt["x"], pt["alpha"], pt["s"])))),
        lambda pt, tol: _one(check_g_power_mean("g", pt["r"], pt["beta1"], pt["beta2"],
                                                pt["lambda"], pt["x"], pt["alpha"], pt["s"],
                                                tol=tol)),
        "power-mean bounds for G"),
    CheckDef(
        "power-mean-g-star", ("x", "alpha", "s", "beta1", "beta2", "lambda", "r"), {},
        lambda pt: (_base_ok(pt) and 0 < pt["lambda"] < 1
                    and min(pt["beta1"], pt["beta2"]) > -1
                    and (pt["r"] == math.inf
                         or (pt["r"] <= 0 and g_hypotheses(pt["x"], pt["alpha"], pt["s"])))),
        lambda pt, tol: _one(check_g_power_mean("g_star", pt["r"], pt["beta1"], pt["beta2"],
                                                pt["lambda"], pt["x"], pt["alpha"], pt["s"],
                                                tol=tol)),
        "power-mean bounds for G*"),
    CheckDef(
        "monotone-beta", ("x", "alpha", "s", "betas"), {"betas": DEFAULT_BETAS},
        lambda pt: _base_ok(pt) and pt["s"] >= 0 and min(_betas(pt)) > -1,
        lambda pt, tol: list(check_g_monotone_beta(pt["x"], pt["alpha"], pt["s"],
                                                   _betas(pt), tol)),
        "G increasing, G* decreasing in beta"),
    CheckDef(
        "subadditivity", ("x", "alpha", "beta", "s", "s2"), {},
        lambda pt: _base_ok(pt) and pt["beta"] >= 0 and pt["s"] >= 0 and pt["s2"] >= 0,
        lambda pt, tol: list(check_subadditivity(pt["x"], pt["alpha"], pt["beta"], pt["s"],
                                                 pt["s2"], tol=tol)),
        "G(s) G(s') >= G(s + s') (beta >= 0)"),
]}


@dataclass(frozen=True)
class GridSpec:
    """Per-parameter value lists; each check sweeps the product of the axes it uses."""

    axes: Mapping[str, Sequence]

    def points(self, names: Sequence[str], defaults: Mapping[str, object] = {}
               ) -> Iterator[dict]:
        lists = []
        for name in names:
            if name in self.axes:
                lists.append([(name, v) for v in self.axes[name]])
            elif name in defaults:
                lists.append([(name, defaults[name])])
            else:
                return
        for combo in itertools.product(*lists):
            yield dict(combo)


def plan(grid: GridSpec | Iterable[Mapping], checks: Sequence[str]
         ) -> list[tuple[str, dict]]:
    """(check id, point) pairs in deterministic order, hypotheses already applied.

    With a ``GridSpec`` each check runs over the product of its own axes.
    With explicit point records a point is used by every listed check whose
    parameters it supplies, or only by the check named in its ``check`` key.
    """
    for cid in checks:
        if cid not in CHECKS:
            raise KeyError(cid)
    tasks = []
    if isinstance(grid, GridSpec):
        for cid in checks:
            c = CHECKS[cid]
            for pt in grid.points(c.params, c.defaults):
                if c.hypothesis(pt):
                    tasks.append((cid, pt))
        return tasks
    records = list(grid)
    for cid in checks:
        c = CHECKS[cid]
        for rec in records:
            if rec.get("check") not in (None, "", cid):
                continue
            pt = {}
            for name in c.params:
                if name in rec and rec[name] not in (None, ""):
                    pt[name] = rec[name]
                elif name in c.defaults:
                    pt[name] = c.defaults[name]
                else:
                    break
            else:
                if c.hypothesis(pt):
                    tasks.append((cid, pt))
    return tasks


def run_check(cid: str, point: Mapping, tol: float = DEFAULT_TOL) -> list[InequalityReport]:
    try:
        return list(CHECKS[cid].run(point, tol))
    except PrecisionLossError:
        nan = math.nan
        return [InequalityReport(cid, dict(point), nan, nan, nan, math.inf, INCONCLUSIVE)]


def iter_sweep(grid, checks: Sequence[str], tol: float = DEFAULT_TOL,
               parallel: int = 1) -> Iterator[InequalityReport]:
    """Yield reports in grid order; workers may run ahead but output order is fixed."""
    tasks = plan(grid, checks)
    if parallel <= 1 or len(tasks) < 2:
        for cid, pt in tasks:
            yield from run_check(cid, pt, tol)
        return
    with ThreadPoolExecutor(max_workers=parallel) as pool:
        for reports in pool.map(lambda task: run_check(task[0], task[1], tol), tasks):
            yield from reports


def sweep(grid, checks: Sequence[str], tol: float = DEFAULT_TOL,
          parallel: int = 1) -> list[InequalityReport]:
    return list(iter_sweep(grid, checks, tol, parallel))
