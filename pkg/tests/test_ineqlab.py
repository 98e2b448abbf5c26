import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from volterrakit import ineqlab as L
from volterrakit import volterra as V
from volterrakit.errors import DomainError
from volterrakit.gammakit import Z_STAR
from volterrakit.volterra import VolterraParams as P

HOLDS, FAILS, INCONCLUSIVE = L.HOLDS, L.FAILS, L.INCONCLUSIVE


def test_verdict_rule():
    assert L.verdict_for(1.0, 0.5) == HOLDS
    assert L.verdict_for(-1.0, 0.5) == FAILS
    assert L.verdict_for(0.5, 0.5) == INCONCLUSIVE
    assert L.verdict_for(0.0, 0.0) == INCONCLUSIVE
    assert L.verdict_for(math.nan, 1.0) == INCONCLUSIVE
    assert L.verdict_for(math.inf, 1.0) == HOLDS


def test_geometric_convexity():
    assert L.check_geometric_convexity(1.0, 4.0, 1.0).margin == 0.0
    assert L.check_geometric_convexity(2.5, 2.5, 0.3, 1.0, 0.5).margin == 0.0
    assert L.check_geometric_convexity(1.0, 4.0, 0.5).verdict == HOLDS


@pytest.mark.parametrize("p", [P(1.0, 0.0, 0.0), P(0.3, -0.5, 2.0)])
def test_turan_alpha(p):
    rep = L.check_turan_alpha(p)
    assert rep.verdict == HOLDS
    assert L.check_turan_alpha(p, tol=1e-11).verdict == HOLDS


@pytest.mark.parametrize("p", [P(1.0, 0.0, 0.0), P(2.0, 1.0, -0.5)])
def test_turan_beta_bounds(p):
    lower, upper = L.check_turan_beta_bounds(p)
    assert lower.verdict == upper.verdict == HOLDS
    assert upper.margin == pytest.approx(lower.rhs / (p.beta + 2.0) - lower.margin, rel=1e-14)


@pytest.mark.parametrize("x, y", [(1.0, 1.0), (0.1, 0.1)])
def test_kimberling_points(x, y):
    kim, expanded = L.check_kimberling(x, y)
    assert kim.verdict == expanded.verdict == HOLDS


def test_kimberling_small_x_limit():
    # margin = f(x+y) - f(x) f(y) -> f(y) - 1 * f(y) as x -> 0
    y = 0.5
    fy = V.nu_neg_complement(y).value
    for x in (1e-4, 1e-8, 1e-12):
        kim, _ = L.check_kimberling(x, y)
        fx = V.nu_neg_complement(x).value
        assert kim.margin == pytest.approx((1.0 - fx) * fy, abs=2 * x + 1e-9)


@given(st.floats(0.05, 4.0), st.floats(0.05, 4.0))
def test_kimberling_forms_agree(x, y):
    kim, expanded = L.check_kimberling(x, y)
    assert np.sign(kim.margin) == np.sign(expanded.margin)
    assert kim.margin == pytest.approx(expanded.margin, abs=kim.combined_error + expanded.combined_error)


def test_delta_n_points_and_identity():
    assert L.check_delta_n(1, P(1.0, 0.0, 0.0)).verdict == HOLDS
    assert L.check_delta_n(3, P(0.5, 1.0, 0.5)).verdict == HOLDS
    p = P(1.3, 0.5, 0.2)
    rep = L.check_delta_n(1, p)
    d0 = V.f_derivative(0, p).value
    kb = V.k_beta(p)
    assert rep.margin == pytest.approx(kb.value * d0 * d0, rel=1e-9)
    with pytest.raises(DomainError):
        L.check_delta_n(2, p)


def test_schur():
    p = P(1.0, 0.0)
    assert L.check_schur(1, p, 0.7, 0.7, 0.7).margin == 0.0
    base = L.check_schur(1, p, 0.0, 1.0, 2.0)
    assert base.verdict == HOLDS
    for perm in itertools.permutations((0.0, 1.0, 2.0)):
        rep = L.check_schur(1, p, *perm)
        assert rep.verdict == base.verdict
        assert rep.margin == pytest.approx(base.margin, rel=1e-13)


def test_logconcavity_points():
    assert L.check_logconcavity("mu_in_beta", 1.0, 1.0, 1.0, alpha=0.0).verdict == HOLDS
    rep = L.check_logconcavity("g_in_beta", 0.5, 0.5, 0.5, alpha=2.0, s=1.0)
    assert rep.verdict == HOLDS
    for target in L.LOGCONCAVE_TARGETS:
        rep = L.check_logconcavity(target, 0.5, 0.0, 0.5, alpha=2.0, beta=0.5, s=1.0)
        assert rep.margin == 0.0


def test_logconcavity_g_hypotheses_enforced():
    with pytest.raises(DomainError):
        L.check_logconcavity("g_in_beta", 0.5, 0.5, 1.5, alpha=2.0, s=1.0)
    with pytest.raises(DomainError):
        L.check_logconcavity("g_star_in_beta", 0.5, 0.5, 0.5, alpha=1.0, s=1.0)
    # the alternative reading puts the threshold on s instead of alpha
    rep = L.check_logconcavity("g_in_beta", 0.5, 0.5, 0.5, alpha=1.0, s=2.0,
                               threshold_on="s")
    assert rep.verdict == HOLDS
    assert L.g_hypotheses(0.5, Z_STAR + 1e-9, 1.0)
    assert not L.g_hypotheses(0.5, Z_STAR, 1.0)


def test_logconvexity_h():
    assert L.check_logconvexity_H(1.0, 0.0, 0.0, 1.0).verdict == HOLDS
    assert L.check_logconvexity_H(1.0, 0.0, 0.0, 0.0).margin == 0.0
    kb = V.k_beta(P(1.0, 0.0, 0.0)).value
    for delta in (0.1, 0.05, 0.025):
        rep = L.check_logconvexity_H(1.0, 0.0, 0.0, delta)
        assert np.sign(rep.margin) == np.sign(kb)


def test_complete_monotonicity_probes():
    for rep in L.check_complete_monotonicity("exp", np.linspace(0.2, 5.0, 10), 4, 0.1):
        assert rep.verdict == HOLDS
    for rep in L.check_complete_monotonicity("mu_recip_x", np.linspace(0.5, 3.0, 10), 4, 0.1):
        assert rep.verdict == HOLDS
    for rep in L.check_complete_monotonicity("nu_neg_complement", np.linspace(0.2, 5.0, 10),
                                             4, 0.1):
        assert rep.verdict == HOLDS
    with pytest.raises(DomainError):
        L.check_complete_monotonicity("exp", [1.0], order=7)


def test_power_mean_points():
    for which in ("g", "g_star"):
        lower = L.check_g_power_mean(which, 0.0, 0.0, 1.0, 0.3, 0.5, 2.0, 1.0)
        upper = L.check_g_power_mean(which, math.inf, 0.0, 1.0, 0.3, 0.5, 2.0, 1.0)
        assert lower.verdict == upper.verdict == HOLDS
        for r in (0.0, math.inf):
            rep = L.check_g_power_mean(which, r, 0.8, 0.8, 0.3, 0.5, 2.0, 1.0)
            assert rep.margin == 0.0


def test_power_mean_positive_order_can_fail():
    # exploratory mode: M_r with r > 0 is not a lower bound for G* at small s
    margins = [L.check_g_power_mean("g_star", 1.0, 0.0, 2.0, 0.5, 0.5, 2.0, s).margin
               for s in (1e-3, 1e-2)]
    assert min(margins) < 0


def test_monotone_beta():
    g, gs = L.check_g_monotone_beta(0.5, 2.0, 0.0)
    assert g.margin == 0.0 and gs.margin == 0.0
    betas = (-0.5, 0.0, 0.5, 1.0, 2.0)
    g, gs = L.check_g_monotone_beta(0.5, 2.0, 1.0, betas)
    assert g.verdict == gs.verdict == HOLDS
    rg, rgs = L.check_g_monotone_beta(0.5, 2.0, 1.0, betas[::-1])
    assert (rg.margin, rgs.margin) == (g.margin, gs.margin)


def test_subadditivity():
    for rep in L.check_subadditivity(0.5, 1.0, 1.0, 0.0, 0.7):
        assert rep.margin == 0.0
    a = L.check_subadditivity(0.5, 1.0, 1.0, 0.5, 0.7)
    b = L.check_subadditivity(0.5, 1.0, 1.0, 0.7, 0.5)
    assert all(r.verdict == HOLDS for r in a)
    assert [r.margin for r in a] == [r.margin for r in b]
    with pytest.raises(DomainError):
        L.check_subadditivity(0.5, 1.0, -0.5, 0.5, 0.7)


def test_sweep_basics():
    assert L.sweep(L.GridSpec({}), ["turan-alpha"]) == []
    assert L.sweep([], ["turan-alpha"]) == []
    grid = L.GridSpec({"x": [1.0], "alpha": [0.0], "beta": [0.0]})
    assert L.sweep(grid, ["turan-alpha"]) == [L.check_turan_alpha(P(1.0, 0.0, 0.0))]
    with pytest.raises(KeyError):
        L.sweep(grid, ["no-such-check"])


def test_sweep_respects_hypotheses():
    grid = L.GridSpec({"x": [0.5, 2.0], "alpha": [0.0, 2.0], "s": [1.0], "m": [0.5],
                       "delta": [0.25]})
    reps = L.sweep(grid, ["logconcave-g-beta", "logconcave-g-star-beta"])
    assert len(reps) == 2
    for rep in reps:
        assert rep.params["x"] < 1 and rep.params["alpha"] > Z_STAR


def test_sweep_order_is_parallel_invariant():
    grid = L.GridSpec({"x": [0.3, 1.0, 2.0], "alpha": [0.0, 1.0], "beta": [0.0, 1.0]})
    checks = ["turan-alpha", "turan-beta"]
    assert L.sweep(grid, checks, parallel=1) == L.sweep(grid, checks, parallel=4)


@given(st.floats(0.2, 4.0), st.floats(-0.5, 2.0), st.floats(-0.5, 2.0))
def test_verdict_stability(x, alpha, beta):
    p = P(x, alpha, beta)
    coarse = L.check_turan_beta_bounds(p, tol=1e-8)
    fine = L.check_turan_beta_bounds(p, tol=1e-9)
    for a, b in zip(coarse, fine):
        assert {a.verdict, b.verdict} != {HOLDS, FAILS}
