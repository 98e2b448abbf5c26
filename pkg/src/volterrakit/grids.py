"""Named parameter grids used by the acceptance suite and the default CLI sweep.

Each grid is a list of point records tagged with the check they feed, so a
union of grids can be passed straight to ``ineqlab.sweep``.
"""
from __future__ import annotations

import itertools

import numpy as np

TURAN_AXES = dict(x=(0.3, 1.0, 2.0, 5.0), alpha=(-0.5, 0.0, 1.0, 3.0),
                  beta=(-0.5, 0.0, 1.0, 2.5))
# 0 < x < 1 and alpha above z*, used for every G / G* property
G_AXES = dict(x=(0.3, 0.5, 0.8), alpha=(1.5, 2.0, 3.0), s=(0.5, 1.0, 2.0))
SCHUR_SEED = 20240611


def _product(check: str, **axes) -> list[dict]:
    names = list(axes)
    return [dict(check=check, **dict(zip(names, combo)))
            for combo in itertools.product(*(axes[n] for n in names))]


def turan_alpha() -> list[dict]:
    return _product("turan-alpha", **TURAN_AXES)


def turan_beta() -> list[dict]:
    return _product("turan-beta", **TURAN_AXES)


def delta_n() -> list[dict]:
    return _product("delta-n", n=(1, 3, 5), x=(0.5, 1.0, 2.0), alpha=(0.0, 1.0),
                    beta=(-0.5, 0.0, 1.0))


def schur(count: int = 20, seed: int = SCHUR_SEED) -> list[dict]:
    rng = np.random.default_rng(seed)
    triples = rng.uniform(-0.9, 3.0, size=(count, 3))
    rows = []
    for b1, b2, b3 in triples:
        for x, alpha in itertools.product((0.5, 1.0), (0.0, 1.0)):
            rows.append(dict(check="schur", n=1, x=x, alpha=alpha, beta1=float(b1),
                             beta2=float(b2), beta3=float(b3)))
    return rows


def kimberling() -> list[dict]:
    vals = (0.1, 0.5, 1.0, 2.0)
    return _product("kimberling", x=vals, y=vals)


def log_concavity() -> list[dict]:
    rows = []
    mu_axes = dict(x=(0.5, 1.0, 2.0), m=(0.0, 1.0), delta=(0.25, 0.5, 1.0))
    for check, fixed in (("logconcave-mu-beta", "alpha"), ("logconcave-mu-alpha", "beta"),
                         ("logconvex-h", "alpha")):
        rows += _product(check, **{fixed: (0.0, 1.0)}, **mu_axes)
    for check in ("logconcave-g-beta", "logconcave-g-star-beta"):
        rows += _product(check, **G_AXES, m=(0.0, 1.0), delta=(0.25, 0.5))
    # beta = m - delta must stay above -1; H alone has a meaning (+inf) at -1
    return [r for r in rows if r["m"] - r["delta"] > -1
            or (r["check"] == "logconvex-h" and r["m"] - r["delta"] == -1)]


def power_mean() -> list[dict]:
    rows = []
    for check in ("power-mean-g", "power-mean-g-star"):
        for b1, b2 in ((0.0, 1.0), (-0.5, 2.0)):
            rows += _product(check, **G_AXES, beta1=(b1,), beta2=(b2,),
                             **{"lambda": (0.25, 0.5, 0.75)}, r=(0.0, float("inf")))
    return rows


def monotone_beta() -> list[dict]:
    return _product("monotone-beta", x=(0.5, 1.0, 2.0), alpha=(1.0,), s=(0.5, 1.0, 2.0),
                    betas=("-0.5;0.0;0.5;1.0;2.0",))


def subadditivity() -> list[dict]:
    vals = (0.3, 0.7, 1.5)
    rows = _product("subadditivity", x=(0.3, 0.7), alpha=(0.0, 2.0), beta=(0.0, 1.0, 2.0),
                    s=vals, s2=vals)
    rows += _product("subadditivity", x=(0.3, 0.7), alpha=(0.0, 2.0), beta=(0.0, 1.0, 2.0),
                     s=(0.0,), s2=vals)
    return rows


def complete_monotonicity() -> list[dict]:
    xs = [float(v) for v in np.linspace(0.5, 3.0, 10)]
    rows = _product("cm-mu-recip", alpha=(0.0, 1.0), beta=(0.0, 1.0), x=xs, order=(4,),
                    h=(0.1,))
    zs = [float(v) for v in np.linspace(0.2, 5.0, 10)]
    rows += _product("cm-nu-neg-complement", x=zs, order=(4,), h=(0.1,))
    rows += _product("cm-exp", x=zs, order=(4,), h=(0.1,))
    return rows


def acceptance_union() -> list[dict]:
    """Points of the inequality criteria (Turan through subadditivity)."""
    return (turan_alpha() + turan_beta() + delta_n() + schur() + kimberling()
            + log_concavity() + power_mean() + monotone_beta() + subadditivity())
