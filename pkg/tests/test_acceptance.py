"""Acceptance gate: every release criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines; each test also asserts, so a plain pytest run enforces the gate.
Tolerances and problem sizes are part of the contract and must not be
loosened here.
"""

import math
import time
from fractions import Fraction as F

import numpy as np
import pytest

import hardyconst as hc
from hardyconst.exact import MARGIN
from oracles import dense_rational, determinant, inverse_trace


def _report(name: str, ok: bool, detail: str = ""):
    line = f"{'PASS' if ok else 'FAIL'} {name}"
    if detail:
        line += f"  [{detail}]"
    print(line, flush=True)
    assert ok, line


def test_criterion_01_determinant_closed_form():
    t0 = time.perf_counter()
    table = hc.det_D_seq(300)
    ok = all(table[m] == hc.det_D_closed(m) for m in range(1, 301))
    elapsed = time.perf_counter() - t0
    _report(
        "1 exact determinant identity, m <= 300, < 1 s",
        ok and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_criterion_02_seed_values():
    checks = [
        hc.det_D(1) == F(1, 2),
        hc.det_D(2) == F(9, 4),
        hc.delta_seq(2)[1] == F(13, 2),
        hc.delta_seq(2)[2] == F(389, 4),
        hc.u_seq(1)[1] == F(26, 9),
        hc.y_seq(1)[1] == F(2),
        hc.q1(1) == F(2),
        hc.det_G(1) == 1,
        hc.det_G(2) == 2,
    ]
    _report("2 nine seed values exact", all(checks), f"{sum(checks)}/9")


def test_criterion_03_log_bound_scans():
    t0 = time.perf_counter()
    rep_y = hc.check_y_bounds(2000)
    rep_q = hc.check_q1_bound(2000)
    elapsed = time.perf_counter() - t0
    ok = rep_y.passed and rep_q.passed and elapsed < 5.0
    _report(
        "3 y sandwich + strong lower bound + q1 bound, k,m <= 2000, < 5 s",
        ok,
        f"{elapsed:.2f}s, margins {rep_y.min_margin:.2e}/{rep_q.min_margin:.2e}",
    )
    assert rep_y.min_margin > MARGIN


def test_criterion_04_eigenvalue_sandwich():
    t0 = time.perf_counter()
    worst = math.inf
    ok = True
    for m in (2, 10, 100, 1_000, 10_000, 100_000):
        lam = hc.smallest_eigenvalue(hc.build_D(m), 1e-12, positive_definite=True).lambda_min
        lm = math.log(m)
        lower = 4.0 / (lm * lm + 8.0 * lm + 8.0)
        upper = 1.0 / math.log(m + 0.5)
        ok = ok and lower < lam < upper
        worst = min(worst, lam - lower, upper - lam)
    elapsed = time.perf_counter() - t0
    _report(
        "4 eigenvalue log-sandwich, m in {2..1e5}, < 10 s",
        ok and elapsed < 10.0,
        f"{elapsed:.2f}s, min margin {worst:.2e}",
    )


def test_criterion_05_theorem_bound_envelopes():
    ok = True
    for n in (3, 10, 100, 1_000, 10_000, 100_000):
        c = hc.continuous_constant(n, 1e-12).constant
        d = hc.discrete_constant(n, 1e-12).constant
        lc = math.log((n + 1) / 2)
        ld = math.log(n)
        ok = ok and 4 * (1 - 2 / (lc + 2)) - 1e-9 <= c <= 4 * (1 - 8 / (lc + 4) ** 2) + 1e-9
        ok = ok and 4 * (1 - 4 / (ld + 4)) - 1e-9 <= d <= 4 * (1 - 8 / (ld + 4) ** 2) + 1e-9
    _report("5 theorem envelopes for c_n and d_n, n in {3..1e5}", ok)


def test_criterion_06_closed_form_small_cases():
    # independent oracles: 1x1 exact eigenvalue, quadratic formula
    lam_d1 = F(1, 2)  # only entry of the half-integer block
    c_expected = 4 / (2 * float(lam_d1) + 1)
    d2_expected = (3 + math.sqrt(5)) / 4
    checks = [
        abs(hc.continuous_constant(1).constant - c_expected) <= 1e-12,
        abs(hc.continuous_constant(2).constant - c_expected) <= 1e-12,
        abs(hc.discrete_constant(1).constant - 1.0) <= 1e-12,
        abs(hc.discrete_constant(2).constant - d2_expected) <= 1e-12,
    ]
    _report("6 closed-form small cases c_1=c_2=2, d_1=1, d_2=(3+sqrt5)/4", all(checks))


def test_criterion_07_structural_identities():
    ok = True
    where = ""
    for n in range(1, 201):
        m = (n + 1) // 2
        b, c = hc.build_B(m), hc.build_C(m)
        d, g = hc.build_D(m), hc.build_G(m)
        odd, even = hc.split_A(hc.build_A(n))
        u, f, h = hc.build_U(n), hc.build_F(n), hc.build_H(n)
        bb, cc, hh = hc.build_B(n), hc.build_C(n), hc.build_H(n)
        ud, us = u.diag_doubled, u.superdiag_doubled
        uut_diag = ud * ud
        uut_diag[:-1] += us * us
        utu_diag = ud * ud
        utu_diag[1:] += us * us
        conds = [
            np.array_equal(odd.diag_doubled, b.diag_doubled),
            np.array_equal(odd.offdiag_doubled, b.offdiag_doubled),
            even is None
            or (
                np.array_equal(even.diag_doubled, hc.build_C(n // 2).diag_doubled)
                and np.array_equal(even.offdiag_doubled, hc.build_C(n // 2).offdiag_doubled)
            ),
            np.array_equal(bb.diag_doubled + cc.diag_doubled, 4 * hh.diag_doubled),
            np.array_equal(bb.offdiag_doubled + cc.offdiag_doubled, 4 * hh.offdiag_doubled),
            np.array_equal(uut_diag, 2 * f.diag_doubled),
            np.array_equal(us * ud[1:], 2 * f.offdiag_doubled),
            np.array_equal(utu_diag, 2 * h.diag_doubled),
            np.array_equal(ud[:-1] * us, 2 * h.offdiag_doubled),
            np.array_equal(c.diag_doubled - b.diag_doubled, 2 * g.diag_doubled),
            np.array_equal(c.offdiag_doubled - b.offdiag_doubled, 2 * g.offdiag_doubled),
            np.array_equal(d.diag_doubled, b.diag_doubled - 1),
            np.array_equal(d.offdiag_doubled, b.offdiag_doubled),
        ]
        if not all(conds):
            ok = False
            where = f"n={n}"
            break
    _report("7 structural identities entrywise exact, n,m <= 200", ok, where)


def test_criterion_08_cross_solver_consistency():
    ok = True
    worst_pair = 0.0
    worst_poly = 0.0
    for m in range(1, 61):
        dmat = hc.build_D(m)
        bis = hc.smallest_eigenvalue(dmat, 1e-12, positive_definite=True)
        lam_ii, _ = hc.inverse_iteration(dmat, bis.lambda_min)
        worst_pair = max(worst_pair, abs(bis.lambda_min - lam_ii))
        worst_poly = max(worst_poly, abs(hc.qpoly_residual(m, bis.lambda_min)))
    ok = ok and worst_pair <= 1e-10 and worst_poly <= 1e-8
    worst_trace = 0.0
    for m in range(1, 31):
        dense_trace = float(np.trace(np.linalg.inv(hc.build_D(m).dense())))
        rel = abs(dense_trace - float(hc.q1(m))) / float(hc.q1(m))
        worst_trace = max(worst_trace, rel)
    ok = ok and worst_trace <= 1e-8
    _report(
        "8 cross-solver agreement (bisection/inverse-iteration/polynomial/trace)",
        ok,
        f"pair {worst_pair:.1e}, poly {worst_poly:.1e}, trace rel {worst_trace:.1e}",
    )


def test_criterion_09_quadrature_oracle_agreement():
    rng = np.random.default_rng(90)
    worst = 0.0
    for n in range(1, 13):
        for _ in range(100):
            cv = hc.CoefficientVector.from_b(rng.standard_normal(n))
            alg = hc.quadratic_forms(cv)
            quad = hc.quadrature_oracle(cv)
            for a, q in zip(alg, quad):
                worst = max(worst, abs(a - q) / max(abs(a), abs(q), 1e-30))
    _report(
        "9 quadratic forms vs quadrature, 100 draws per n <= 12, rel 1e-8",
        worst <= 1e-8,
        f"worst rel {worst:.1e}",
    )


def test_criterion_10_extremizers():
    ok = True
    worst = 0.0
    for n in (2, 5, 10, 100):
        quot = hc.discrete_quotient(hc.extremal_reconstruction(n, "discrete"))
        gap = abs(quot - hc.discrete_constant(n).constant)
        worst = max(worst, gap)
        ok = ok and gap <= 1e-8
    for n in (10, 1_000, 100_000):
        quot = hc.discrete_quotient(hc.sqrt_test_sequence(n))
        ok = ok and quot > hc.harmonic_lower_bound(n)
    _report(
        "10 extremizers achieve d_n; sqrt sequence beats harmonic bound",
        ok,
        f"worst extremizer gap {worst:.1e}",
    )


def test_criterion_11_performance_envelope():
    t0 = time.perf_counter()
    rec = hc.discrete_constant(100_000, 1e-12)
    elapsed = time.perf_counter() - t0
    _report(
        "11 single constant at n = 1e5 in < 1 s",
        elapsed < 1.0 and rec.constant < 4.0,
        f"{elapsed:.3f}s, d = {rec.constant:.9f}",
    )


def test_supplement_exact_oracles_for_seed_values():
    # not a numbered criterion: the same seed quantities recomputed through
    # the elimination oracles, guarding the frozen values above
    assert determinant(dense_rational(hc.build_D(2))) == F(9, 4)
    assert inverse_trace(dense_rational(hc.build_D(1))) == 2
    assert determinant(dense_rational(hc.build_G(2))) == 2
