"""Adaptive Gauss-Kronrod integration for integrands of the form

    g(t) * t**left_exponent * log(t)**log_power

on finite intervals [a, b] and on semi-infinite intervals [a, inf).

Pieces touching t = 0 are mapped with t = c * exp(-v), which turns both the
t**beta singularity and the log**n weight into a smooth, exponentially
decaying integrand in v; the truncated v-tail is bounded in closed form.
Semi-infinite integrals are truncated at a point T beyond which the
integrand decays at least geometrically and the tail is bounded by
2 * |h(T)|. Every error bound returned here is the sum of per-interval
|K15 - G7| differences, a floating-point rounding floor and the analytic
tail bounds.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_NODES = 200_000
# geometric tails are pushed below this regardless of tol
TAIL_FLOOR = 1e-20

# Kronrod 15-point abscissae on [0, 1] (the rule is symmetric), Kronrod
# weights, and the embedded 7-point Gauss weights for every other abscissa.
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
WEIGHTS_K = np.concatenate([_WK[:-1], _WK[::-1]])
WEIGHTS_G = np.zeros(15)
WEIGHTS_G[1:7:2] = _WG[:3]
WEIGHTS_G[7] = _WG[3]
WEIGHTS_G[9:15:2] = _WG[2::-1]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_bound: float
    nodes_used: int
    converged: bool = True

    def __post_init__(self):
        # plain Python scalars, whatever numpy handed us
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "abs_error_bound", float(self.abs_error_bound))
        object.__setattr__(self, "nodes_used", int(self.nodes_used))
        if not (self.abs_error_bound >= 0.0 and math.isfinite(self.abs_error_bound)):
            raise ValueError(f"invalid error bound {self.abs_error_bound!r}")
        if self.nodes_used < 0:
            raise ValueError("nodes_used must be non-negative")

    def __add__(self, other: "EvalResult") -> "EvalResult":
        return EvalResult(
            self.value + other.value,
            self.abs_error_bound + other.abs_error_bound,
            self.nodes_used + other.nodes_used,
            self.converged and other.converged,
        )

    def scaled(self, factor: float) -> "EvalResult":
        return EvalResult(self.value * factor, self.abs_error_bound * abs(factor),
                          self.nodes_used, self.converged)


ZERO = EvalResult(0.0, 0.0, 0)


@dataclass(frozen=True)
class IntegrandSpec:
    """h(t) = g(t) * t**left_exponent * log(t)**log_power on [lower, upper].

    ``evaluator`` maps a float array to g. It receives t, or u = log t when
    ``log_argument`` is set, and returns g, or log g when ``log_scale`` is
    set. With both flags the integrand is assembled entirely in log space,
    so t may range far beyond the double-precision exponent range.
    ``tail_start`` is a point past which h is known to decay geometrically.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    left_exponent: float = 0.0
    log_power: int = 0
    lower: float = 0.0
    upper: float = math.inf
    log_scale: bool = False
    log_argument: bool = False
    tail_start: float | None = None

    def __post_init__(self):
        if not self.left_exponent > -1.0:
            raise DomainError(
                f"left_exponent must exceed -1 for integrability, got {self.left_exponent}")
        if int(self.log_power) != self.log_power or self.log_power < 0:
            raise DomainError(f"log_power must be a non-negative integer, got {self.log_power}")
        if not (self.lower >= 0.0 and math.isfinite(self.lower)):
            raise DomainError(f"lower limit must be finite and >= 0, got {self.lower}")
        if not self.lower < self.upper:
            raise DomainError(f"need lower < upper, got [{self.lower}, {self.upper}]")

    def with_interval(self, lower: float, upper: float) -> "IntegrandSpec":
        return dataclasses.replace(self, lower=lower, upper=upper)

    def smooth_log(self, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(log |g|, sign g) at t = exp(u)."""
        u = np.asarray(u, dtype=float)
        with np.errstate(over="ignore", under="ignore"):
            arg = u if self.log_argument else np.exp(u)
        raw = np.asarray(self.evaluator(arg), dtype=float)
        if self.log_scale:
            return raw, np.ones_like(raw)
        with np.errstate(divide="ignore"):
            return np.log(np.abs(raw)), np.sign(raw)

    def weighted(self, u: np.ndarray, extra_power: float = 0.0) -> np.ndarray:
        """h(e^u) * e^(extra_power * u), never forming t itself."""
        u = np.asarray(u, dtype=float)
        logg, sign = self.smooth_log(u)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            expo = logg + (self.left_exponent + extra_power) * u
            vals = sign * np.exp(expo)
        if self.log_power:
            vals = vals * u ** self.log_power
        return vals

    def __call__(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            return self.weighted(np.log(t))


def gauss_kronrod(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                  tol: float = DEFAULT_TOL,
                  max_nodes: int = DEFAULT_MAX_NODES) -> EvalResult:
    """Adaptive G7/K15 integration of a vectorised f over finite [a, b].

    Intervals are processed in batches: every interval whose error estimate
    exceeds its width-proportional share of ``tol`` is bisected and
    re-evaluated in one call to ``f``. The result is flagged non-converged
    when the node budget runs out; the bound still covers every interval.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("gauss_kronrod needs finite limits")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if a == b:
        return ZERO
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    width = b - a
    lo = np.array([a])
    hi = np.array([b])
    value = 0.0
    err = 0.0
    nodes = 0
    converged = True
    while lo.size:
        half = 0.5 * (hi - lo)
        mid = lo + half
        t = mid[:, None] + half[:, None] * NODES[None, :]
        y = np.asarray(f(t.ravel()), dtype=float).reshape(t.shape)
        if not np.all(np.isfinite(y)):
            raise FloatingPointError(f"integrand not finite on [{lo.min()}, {hi.max()}]")
        nodes += y.size
        k = half * (y @ WEIGHTS_K)
        g = half * (y @ WEIGHTS_G)
        rounding = 50.0 * _EPS * half * (np.abs(y) @ WEIGHTS_K)
        est = np.abs(k - g) + rounding
        share = tol * (hi - lo) / width
        # an interval that can no longer be split is accepted as is
        tiny = half <= 4.0 * _EPS * np.maximum(np.abs(mid), 1e-300)
        done = (est <= share) | (np.abs(k - g) <= rounding) | tiny
        if nodes >= max_nodes:
            done = np.ones_like(done)
            converged = bool(np.all(est <= share))
        value += float(k[done].sum())
        err += float(est[done].sum())
        keep_lo, keep_hi = lo[~done], hi[~done]
        mids = 0.5 * (keep_lo + keep_hi)
        lo = np.concatenate([keep_lo, mids])
        hi = np.concatenate([mids, keep_hi])
    return EvalResult(sign * value, err, nodes, converged)


def _upper_gamma_int(n: int, z: float) -> float:
    """Gamma(n + 1, z) = n! e^{-z} sum_{k<=n} z^k / k! for integer n >= 0."""
    term = 1.0
    total = 1.0
    for k in range(1, n + 1):
        term *= z / k
        total += term
    return math.factorial(n) * math.exp(-z) * total


def _near_zero(spec: IntegrandSpec, c: float, tol: float, max_nodes: int) -> EvalResult:
    """Integral of h over [0, c], 0 < c <= 1, via t = c * exp(-v)."""
    a = spec.left_exponent + 1.0
    n = int(spec.log_power)
    logc = math.log(c)

    def mapped(v):
        # dt = t dv, so the integrand picks up one extra power of t
        return spec.weighted(logc - v, extra_power=1.0)

    # sup |g| near 0, from the t -> 0 limit and the truncation point
    def sup_g(v_cut):
        logg, _ = spec.smooth_log(np.array([-np.inf, logc - v_cut]))
        return 2.0 * float(np.exp(np.max(logg)))

    v_cut = max(8.0, 16.0 / a)
    budget = 0.01 * tol
    for _ in range(200):
        # |log t|^n t^a over t < c e^{-v_cut}, integrated in closed form
        bound = sup_g(v_cut) * _upper_gamma_int(n, a * (v_cut - logc)) / a ** (n + 1)
        if bound <= budget or not math.isfinite(bound):
            break
        v_cut *= 1.25
    if not math.isfinite(bound):
        raise DomainError("integrand is unbounded at t = 0 beyond the t**beta factor")
    body = gauss_kronrod(mapped, 0.0, v_cut, tol - min(bound, budget), max_nodes)
    return EvalResult(body.value, body.abs_error_bound + bound, body.nodes_used + 2,
                      body.converged)


def _pieces(lower: float, upper: float) -> list[tuple[float, float]]:
    # the log**n weight changes sign at t = 1
    if lower < 1.0 < upper:
        return [(lower, 1.0), (1.0, upper)]
    return [(lower, upper)]


def integrate_finite(spec: IntegrandSpec, tol: float = DEFAULT_TOL,
                     max_nodes: int = DEFAULT_MAX_NODES) -> EvalResult:
    """Integrate ``spec`` over its finite interval to absolute accuracy tol."""
    if not math.isfinite(spec.upper):
        raise DomainError("integrate_finite needs a finite upper limit")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    pieces = _pieces(spec.lower, spec.upper)
    share = tol / len(pieces)
    total = ZERO
    for lo, hi in pieces:
        if lo == 0.0:
            total = total + _near_zero(spec, hi, share, max_nodes)
        else:
            total = total + gauss_kronrod(spec, lo, hi, share, max_nodes)
    return total


def _geometric_tail_start(spec: IntegrandSpec, start: float, tol: float) -> float | None:
    """First T >= start with |h| decaying by <= 1/2 per unit step and 2|h(T)| <= tol."""
    t_cut = start
    probes = np.arange(9.0)
    for _ in range(64):
        vals = np.abs(spec(t_cut + probes))
        ratios_ok = np.all(vals[1:] <= 0.5 * vals[:-1]) or vals[0] == 0.0
        if ratios_ok and 2.0 * vals[0] <= tol:
            return t_cut
        t_cut += 16.0 if ratios_ok else max(16.0, t_cut)
        if t_cut > 1e6:
            break
    return None


def integrate_semi_infinite(spec: IntegrandSpec, tol: float = DEFAULT_TOL,
                            max_nodes: int = DEFAULT_MAX_NODES) -> EvalResult:
    """Integrate ``spec`` over [lower, inf).

    The interval is cut at T = max(tail_start, lower + 16), moved outward
    until the integrand halves over every unit step sampled past T, and the
    tail is bounded by 2 |h(T)|. Integrands without geometric decay fall back
    to a log-tangent compactification whose bound is the quadrature estimate
    alone (see ``integrate_compactified``).
    """
    if math.isfinite(spec.upper):
        raise DomainError("integrate_semi_infinite needs upper = inf")
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    start = spec.lower + 16.0
    if spec.tail_start is not None:
        start = max(start, spec.tail_start)
    # a tol-independent cut keeps the bound monotone in tol
    tail_budget = min(0.01 * tol, TAIL_FLOOR)
    t_cut = _geometric_tail_start(spec, start, tail_budget)
    if t_cut is None:
        return integrate_compactified(spec, tol, max_nodes)
    tail = 2.0 * float(abs(spec(np.array([t_cut]))[0]))
    body = integrate_finite(spec.with_interval(spec.lower, t_cut), tol - tail, max_nodes)
    return EvalResult(body.value, body.abs_error_bound + tail, body.nodes_used + 9,
                      body.converged)


def integrate_compactified(spec: IntegrandSpec, tol: float = DEFAULT_TOL,
                           max_nodes: int = DEFAULT_MAX_NODES) -> EvalResult:
    """Integrate over [lower, inf) with t = exp(tan(theta)).

    Handles slowly (algebraically in log t) decaying integrands such as
    1 / (t (log(t)**2 + pi**2)). The mapped integrand is assumed to vanish
    or stay bounded at both ends; no analytic tail bound is added.
    """

    def mapped(theta):
        u = np.tan(theta)
        out = spec.weighted(u, extra_power=1.0) * (1.0 + u * u)
        return np.where(np.isfinite(out), out, 0.0)

    left = -0.5 * math.pi if spec.lower == 0.0 else math.atan(math.log(spec.lower))
    return gauss_kronrod(mapped, left, 0.5 * math.pi, tol, max_nodes)


def integrate(spec: IntegrandSpec, tol: float = DEFAULT_TOL,
              max_nodes: int = DEFAULT_MAX_NODES) -> EvalResult:
    if math.isfinite(spec.upper):
        return integrate_finite(spec, tol, max_nodes)
    return integrate_semi_infinite(spec, tol, max_nodes)
