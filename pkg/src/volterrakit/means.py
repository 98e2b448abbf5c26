"""Weighted two-point power means M_r(x1, x2; lam) for r in [-inf, inf]."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# below this |r| the geometric-mean limit is used
ZERO_ORDER_CUTOFF = 1e-8


@dataclass(frozen=True)
class PowerMeanOrder:
    """Extended-real order of a power mean: a finite real, -inf or +inf."""

    order: float

    def __post_init__(self):
        if math.isnan(self.order):
            raise DomainError("power-mean order cannot be NaN")

    @classmethod
    def parse(cls, text: str) -> "PowerMeanOrder":
        key = text.strip().lower()
        if key in ("inf", "+inf", "infinity", "+infinity", "max"):
            return cls(math.inf)
        if key in ("-inf", "-infinity", "min"):
            return cls(-math.inf)
        return cls(float(key))

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.order)

    def __float__(self) -> float:
        return self.order

    def __str__(self) -> str:
        return repr(self.order) if self.is_finite else ("inf" if self.order > 0 else "-inf")


def power_mean(r, x1: float, x2: float, lam: float) -> float:
    """(lam x1^r + (1 - lam) x2^r)^(1/r), with the limits at r = 0, +-inf."""
    r = float(r)
    if math.isnan(r):
        raise DomainError("power-mean order cannot be NaN")
    if not (x1 > 0 and x2 > 0 and math.isfinite(x1) and math.isfinite(x2)):
        raise DomainError(f"power mean needs finite positive arguments, got {x1}, {x2}")
    if not 0 < lam < 1:
        raise DomainError(f"weight must lie in (0, 1), got {lam}")
    if x1 == x2:
        return x1
    if r == math.inf:
        return max(x1, x2)
    if r == -math.inf:
        return min(x1, x2)
    l1, l2 = math.log(x1), math.log(x2)
    if abs(r) < ZERO_ORDER_CUTOFF:
        out = math.exp(lam * l1 + (1.0 - lam) * l2)
    else:
        # log-sum-exp keeps x^r from overflowing for large |r|
        s = np.logaddexp(math.log(lam) + r * l1, math.log1p(-lam) + r * l2)
        out = math.exp(float(s) / r)
    # the exact mean lies between min and max; clamp rounding excursions
    return min(max(out, min(x1, x2)), max(x1, x2))
