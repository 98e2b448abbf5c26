"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the bare PASS/FAIL
listing, or through pytest, where the lines are repeated in the terminal
summary. Criteria that cannot be met as stated are still executed at their
stated tolerance; they are marked strict-xfail with the reason, so an
unexpected pass would also be reported.
"""
import math
import sys
import time

import numpy as np
import pytest

from volterrakit import cli, grids, oracle
from volterrakit import ineqlab as L
from volterrakit import volterra as V
from volterrakit.means import power_mean
from volterrakit.volterra import VolterraParams as P

TIME_LIMIT = 60.0
RESULTS = []


def record(num, ok, detail, started):
    elapsed = time.perf_counter() - started
    ok = ok and elapsed < TIME_LIMIT
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {detail} [{elapsed:.1f}s]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def sweep_summary(rows):
    checks = list(dict.fromkeys(r["check"] for r in rows))
    reps = L.sweep(rows, checks)
    fails = [r for r in reps if r.failed]
    return reps, fails


def describe(reps, fails):
    inc = sum(r.verdict == L.INCONCLUSIVE for r in reps)
    text = f"{len(reps)} reports, {len(fails)} fails, {inc} inconclusive"
    if fails:
        text += "; first fail " + ", ".join(f"{k}={v}" for k, v in fails[0].params.items())
        text += f" margin={fails[0].margin:.6g}"
    return text


def random_tuples(count, seed):
    rng = np.random.default_rng(seed)
    return [tuple(float(v) for v in row) for row in np.column_stack([
        rng.uniform(0.1, 5.0, count), rng.uniform(-0.9, 3.0, count),
        rng.uniform(-0.9, 3.0, count), rng.uniform(0.0, 5.0, count)])]


def test_oracle_equivalence():
    t0 = time.perf_counter()
    bad = 0
    for x, alpha, beta, s in random_tuples(60, 1):
        p = P(x, alpha, beta)
        pairs = ((V.mu(p), oracle.oracle_mu(p)),
                 (V.mu_upper(p, s), oracle.oracle_mu(p, s, math.inf)),
                 (V.mu_lower(p, s), oracle.oracle_mu(p, 0.0, s)))
        for a, b in pairs:
            bad += abs(a.value - b.value) > a.abs_error_bound + b.abs_error_bound
    record(1, bad == 0, f"60 tuples x 3 functions, {bad} disagreements", t0)


def test_complementarity():
    t0 = time.perf_counter()
    bad = 0
    for x, alpha, beta, s in random_tuples(100, 2):
        p = P(x, alpha, beta)
        a, b = V.g(p, s), V.g_star(p, s)
        bad += abs(a.value + b.value - 1.0) > a.abs_error_bound + b.abs_error_bound
    record(2, bad == 0, f"100 tuples, {bad} with |g + g* - 1| above the combined error", t0)


@pytest.mark.xfail(strict=True, reason="mu(5,-0.5,alpha) violates the alpha-Turan inequality "
                   "at alpha=-0.5 (margin -8.49 against error 1.4e-9)")
def test_turan_alpha():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.turan_alpha())
    record(3, len(reps) == 64 and not fails, describe(reps, fails), t0)


def test_turan_beta_bounds():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.turan_beta())
    record(4, len(reps) == 128 and not fails, describe(reps, fails), t0)


def test_delta_n():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.delta_n())
    record(5, len(reps) == 54 and not fails, describe(reps, fails), t0)


def test_schur():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.schur())
    record(6, len(reps) == 80 and not fails, describe(reps, fails), t0)


@pytest.mark.xfail(strict=True, reason="the complement equals 0.925 at x=1e-6; it tends to 1 "
                   "like 1 - 1/log(1/x), so the 1e-3 window is out of reach")
def test_kimberling():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.kimberling())
    in_unit = all(0.0 < V.nu_neg_complement(x).value < 1.0 for x in (0.1, 0.5, 1.0, 2.0))
    near = V.nu_neg_complement(1e-6).value
    ok = len(reps) == 32 and not fails and in_unit and abs(near - 1.0) <= 1e-3
    record(7, ok, f"{describe(reps, fails)}; f in (0,1): {in_unit}; f(1e-6)={near:.10f}", t0)


def test_log_concavity():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.log_concavity())
    record(8, not fails, describe(reps, fails), t0)


def test_power_mean_sandwich():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.power_mean())
    record(9, len(reps) == 648 and not fails, describe(reps, fails), t0)


def test_monotone_in_beta():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.monotone_beta())
    record(10, len(reps) == 18 and not fails, describe(reps, fails), t0)


def test_subadditivity():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.subadditivity())
    zero = [r for r in reps if r.params["s"] == 0.0]
    zero_ok = all(abs(r.margin) <= r.combined_error for r in zero)
    record(11, not fails and zero_ok and len(zero) == 72,
           f"{describe(reps, fails)}; s=0 margins within error: {zero_ok}", t0)


def test_complete_monotonicity():
    t0 = time.perf_counter()
    reps, fails = sweep_summary(grids.complete_monotonicity())
    controls = [r for r in reps if r.name == "cm-exp"]
    ok = not fails and all(r.verdict == L.HOLDS for r in controls)
    record(12, ok, describe(reps, fails), t0)


def test_means():
    t0 = time.perf_counter()
    rng = np.random.default_rng(13)
    problems = []
    for r in (-math.inf, -3.0, 0.0, 0.5, 2.0, math.inf):
        for a in (1e-3, 1.0, 7.5):
            if power_mean(r, a, a, 0.3) != a:
                problems.append(f"idempotence r={r} a={a}")
    for _ in range(20):
        a, b = rng.uniform(0.01, 10.0, 2)
        lam = rng.uniform(0.05, 0.95)
        r1, r2 = np.sort(rng.uniform(-5.0, 5.0, 2))
        if not power_mean(r1, a, b, lam) <= power_mean(r2, a, b, lam):
            problems.append(f"order monotonicity {r1},{r2}")
        m0 = power_mean(0.0, a, b, lam)
        if abs(power_mean(1e-8, a, b, lam) - m0) > 1e-6 * m0:
            problems.append("continuity at 0")
    record(13, not problems, f"{len(problems)} problems" + (f": {problems[0]}" if problems
                                                            else ""), t0)


@pytest.mark.xfail(strict=True, reason="the union grid contains the alpha-Turan "
                   "counterexample of criterion 3, so verify exits 1")
def test_cli_contract():
    t0 = time.perf_counter()
    code1, out1, err1 = cli.run(["verify", "--parallel", "1"])
    code8, out8, _ = cli.run(["verify", "--parallel", "8"])
    same = out1 == out8 and code1 == code8
    record(14, code1 == 0 and same,
           f"exit code {code1} ({err1.strip()}); --parallel 1 and 8 byte-identical: {same}", t0)


CRITERIA = [test_oracle_equivalence, test_complementarity, test_turan_alpha,
            test_turan_beta_bounds, test_delta_n, test_schur, test_kimberling,
            test_log_concavity, test_power_mean_sandwich, test_monotone_in_beta,
            test_subadditivity, test_complete_monotonicity, test_means, test_cli_contract]

if __name__ == "__main__":
    for fn in CRITERIA:
        try:
            fn()
        except AssertionError:
            pass
    sys.exit(0 if all(line.startswith("PASS") for line in RESULTS) else 1)
