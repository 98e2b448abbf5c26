"""Evaluators for the Volterra family and its incomplete variants.

    mu(x, beta, alpha)        = int_0^inf  x^(t+alpha) t^beta / (Gamma(t+alpha+1) Gamma(beta+1)) dt
    mu_upper(x, beta, alpha, s) = same integral over (s, inf)
    mu_lower(x, beta, alpha, s) = same integral over (0, s)

The factor 1/Gamma(beta+1) is applied once, outside the quadrature, and the
remaining kernel x^(t+alpha) / Gamma(t+alpha+1) is evaluated in log space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from . import quad
from .errors import DomainError, PrecisionLossError
from .gammakit import ln_gamma
from .quad import DEFAULT_TOL, EvalResult, IntegrandSpec

# ratio denominators must exceed this multiple of their own error bound
RESOLUTION_FACTOR = 10.0


@dataclass(frozen=True)
class VolterraParams:
    x: float
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        for name in ("x", "alpha", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite, got {getattr(self, name)}")
        if not self.x > 0:
            raise DomainError(f"x must be > 0, got {self.x}")
        if not self.alpha > -1:
            raise DomainError(f"alpha must be > -1, got {self.alpha}")
        if not self.beta > -1:
            raise DomainError(f"beta must be > -1, got {self.beta}")

    def replace(self, **changes) -> "VolterraParams":
        return VolterraParams(**{**self.__dict__, **changes})


def _check_split(s: float) -> float:
    s = float(s)
    if not (math.isfinite(s) and s >= 0):
        raise DomainError(f"split point s must be finite and >= 0, got {s}")
    return s


def _check_tol(tol: float) -> float:
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    return tol


def tail_start(p: VolterraParams) -> float:
    # beyond this point x / (t + alpha + 1) <= 1/4 and the integrand halves per unit step
    return 4.0 * math.e * p.x + abs(p.alpha) + abs(p.beta) + 16.0


def kernel_spec(p: VolterraParams, log_power: int = 0, lower: float = 0.0,
                upper: float = math.inf) -> IntegrandSpec:
    """x^(t+alpha) t^beta log^n(t) / Gamma(t+alpha+1) on [lower, upper]."""
    logx = math.log(p.x)
    alpha = p.alpha

    def log_kernel(t):
        return (t + alpha) * logx - special.gammaln(t + alpha + 1.0)

    return IntegrandSpec(log_kernel, left_exponent=p.beta, log_power=log_power,
                         lower=lower, upper=upper, log_scale=True,
                         tail_start=tail_start(p))


def _kernel_integral(p: VolterraParams, log_power: int, lower: float, upper: float,
                     tol: float) -> EvalResult:
    if lower >= upper:
        return EvalResult(0.0, 0.0, 0)
    return quad.integrate(kernel_spec(p, log_power, lower, upper), tol)


def _normalised(p: VolterraParams, lower: float, upper: float, tol: float) -> EvalResult:
    lg = ln_gamma(p.beta + 1.0)
    raw = _kernel_integral(p, 0, lower, upper, tol * math.exp(lg))
    return raw.scaled(math.exp(-lg))


def mu(p: VolterraParams, tol: float = DEFAULT_TOL) -> EvalResult:
    """The complete Volterra function mu(x, beta, alpha)."""
    return _normalised(p, 0.0, math.inf, _check_tol(tol))


def nu(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    return mu(VolterraParams(x, 0.0, 0.0), tol)


def nu_alpha(x: float, alpha: float, tol: float = DEFAULT_TOL) -> EvalResult:
    return mu(VolterraParams(x, alpha, 0.0), tol)


def mu_beta(x: float, beta: float, tol: float = DEFAULT_TOL) -> EvalResult:
    return mu(VolterraParams(x, 0.0, beta), tol)


def mu_upper(p: VolterraParams, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Upper incomplete function: the integral over (s, inf)."""
    s = _check_split(s)
    if s == 0.0:
        return mu(p, tol)
    return _normalised(p, s, math.inf, _check_tol(tol))


def mu_lower(p: VolterraParams, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """Lower incomplete function: the integral over (0, s)."""
    s = _check_split(s)
    _check_tol(tol)
    if s == 0.0:
        return EvalResult(0.0, 0.0, 0)
    return _normalised(p, 0.0, s, tol)


def ratio(num: EvalResult, den: EvalResult) -> EvalResult:
    """num / den with first-order error propagation."""
    if not abs(den.value) > RESOLUTION_FACTOR * den.abs_error_bound:
        raise PrecisionLossError(
            f"denominator {den.value!r} not resolved above its bound {den.abs_error_bound!r}")
    r = num.value / den.value
    err = (num.abs_error_bound + abs(r) * den.abs_error_bound) / abs(den.value)
    return EvalResult(r, err, num.nodes_used + den.nodes_used,
                      num.converged and den.converged)


def g(p: VolterraParams, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """G_beta(x, alpha, s) = mu_upper / mu, in [0, 1]."""
    return ratio(mu_upper(p, s, tol), mu(p, tol))


def g_star(p: VolterraParams, s: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """G*_beta(x, alpha, s) = mu_lower / mu, in [0, 1]."""
    return ratio(mu_lower(p, s, tol), mu(p, tol))


def f_derivative(n: int, p: VolterraParams, tol: float = DEFAULT_TOL) -> EvalResult:
    """n-th beta-derivative of F(beta) = Gamma(beta+1) mu(x, beta, alpha).

    D_n = int_0^inf x^(t+alpha) t^beta log^n(t) / Gamma(t+alpha+1) dt, split at
    t = 1 where log^n changes sign.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"derivative order must be a non-negative integer, got {n}")
    return _kernel_integral(p, int(n), 0.0, math.inf, _check_tol(tol))


def k_beta(p: VolterraParams, tol: float = DEFAULT_TOL) -> EvalResult:
    """Second beta-derivative of log F, (D0 D2 - D1^2) / D0^2."""
    d0, d1, d2 = (f_derivative(n, p, tol) for n in range(3))
    if not d0.value > RESOLUTION_FACTOR * d0.abs_error_bound:
        raise PrecisionLossError("D0 not resolved above its error bound")
    q = d1.value / d0.value
    value = d2.value / d0.value - q * q
    err = (d2.abs_error_bound / d0.value
           + 2.0 * abs(q) * d1.abs_error_bound / d0.value
           + abs(d2.value / d0.value - 2.0 * q * q) * d0.abs_error_bound / d0.value)
    nodes = d0.nodes_used + d1.nodes_used + d2.nodes_used
    return EvalResult(value, err, nodes, d0.converged and d1.converged and d2.converged)


def nu_neg_complement(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """f(x) = int_0^inf e^(-x t) / (t (log^2 t + pi^2)) dt for x > 0.

    Integrated in u = log t. Below u_lo the factor exp(-x e^u) is replaced by
    1 and the remaining arctan tail is exact up to x e^u_lo / (u_lo^2 + pi^2);
    above u_hi the integrand is bounded by E1(x e^u_hi) / pi^2.
    """
    x = float(x)
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"nu_neg_complement requires finite x > 0, got {x}")
    _check_tol(tol)
    budget = 0.01 * tol
    pi2 = math.pi ** 2
    u_lo = min(-4.0, math.log(budget / x))
    left_err = x * math.exp(u_lo) / (u_lo * u_lo + pi2)
    # int_{-inf}^{u_lo} du / (u^2 + pi^2); pi/2 + atan(u/pi) = atan(pi/|u|) for u < 0
    left = math.atan(math.pi / -u_lo) / math.pi
    z = 8.0
    while math.exp(-z) / (pi2 * z) > budget:
        z += 4.0
    u_hi = max(math.log(z / x), u_lo + 1.0)
    right_err = math.exp(-z) / (pi2 * z)

    def integrand(u):
        return np.exp(-x * np.exp(u)) / (u * u + pi2)

    body = quad.gauss_kronrod(integrand, u_lo, u_hi, tol - 2 * budget)
    return EvalResult(left + body.value, body.abs_error_bound + left_err + right_err,
                      body.nodes_used, body.converged)


def nu_neg(x: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """nu(-x) := e^(-x) - nu_neg_complement(x)."""
    comp = nu_neg_complement(x, tol)
    return EvalResult(math.exp(-x) - comp.value, comp.abs_error_bound,
                      comp.nodes_used, comp.converged)
