"""Real-argument Gamma-family primitives: log-gamma, reciprocal gamma,
digamma and trigamma.

All functions accept a positive float or an array of positive floats and
return the same shape. ``ln_gamma`` is backed by ``scipy.special.gammaln``;
``digamma`` and ``trigamma`` use upward recurrence to an argument >= 10
followed by the Bernoulli asymptotic series.
"""
from __future__ import annotations

import math

import numpy as np
from scipy import special

from .errors import DomainError

# abscissa of the minimum of Gamma on (0, inf); digamma vanishes here
Z_STAR = 1.4616321449683623

_SHIFT_TO = 10.0

# B_{2k} / (2k) for the digamma series, k = 1..7
_PSI_COEF = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
# B_{2k} for the trigamma series, k = 1..7
_PSI1_COEF = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def _checked(z, name):
    arr = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError(f"{name} requires finite z > 0, got {z!r}")
    return arr


def _out(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def ln_gamma(z):
    """log Gamma(z) for z > 0."""
    arr = _checked(z, "ln_gamma")
    return _out(special.gammaln(arr), z)


def recip_gamma(z):
    """1 / Gamma(z) for z > 0, computed as exp(-ln_gamma(z))."""
    arr = _checked(z, "recip_gamma")
    return _out(np.exp(-special.gammaln(arr)), z)


def digamma(z):
    """psi(z) = d/dz log Gamma(z) for z > 0."""
    w = _checked(z, "digamma").copy()
    acc = np.zeros_like(w)
    # psi(z) = psi(z + 1) - 1/z
    while True:
        low = w < _SHIFT_TO
        if not np.any(low):
            break
        acc = np.where(low, acc - 1.0 / np.where(low, w, 1.0), acc)
        w = np.where(low, w + 1.0, w)
    inv2 = 1.0 / (w * w)
    series = np.zeros_like(w)
    for c in reversed(_PSI_COEF):
        series = (series + c) * inv2
    res = np.log(w) - 0.5 / w - series + acc
    return _out(res, z)


def trigamma(z):
    """psi'(z) for z > 0; strictly positive."""
    w = _checked(z, "trigamma").copy()
    acc = np.zeros_like(w)
    # psi'(z) = psi'(z + 1) + 1/z^2
    while True:
        low = w < _SHIFT_TO
        if not np.any(low):
            break
        safe = np.where(low, w, 1.0)
        acc = np.where(low, acc + 1.0 / (safe * safe), acc)
        w = np.where(low, w + 1.0, w)
    inv2 = 1.0 / (w * w)
    series = np.zeros_like(w)
    for c in reversed(_PSI1_COEF):
        series = (series + c) * inv2
    res = 1.0 / w + 0.5 * inv2 + series / w + acc
    return _out(res, z)


def gamma(z) -> float:
    """Gamma(z) for scalar z > 0 (overflows to inf past ~171.6)."""
    _checked(z, "gamma")
    return math.gamma(float(z))
