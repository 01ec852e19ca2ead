"""Named verification suites covering every module invariant.

Each check is independent, deterministic for a fixed seed, and returns a
:class:`CheckResult`; the CLI ``verify`` subcommand prints one PASS/FAIL line
per check.  Two checks accept a deliberate-corruption hook (used as a
negative control: a corrupted input must make the check fail by detection,
not by decree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import exact, hardy
from .eigensolve import (
    inverse_iteration,
    qpoly_residual,
    smallest_eigenvalue,
    smallest_eigenvalue_A,
    sturm_count,
)
from .matrices import (
    TridiagonalMatrix,
    build_A,
    build_B,
    build_C,
    build_D,
    build_F,
    build_G,
    build_H,
    build_U,
    split_A,
)

__all__ = ["CheckResult", "VerifyScale", "CORRUPTIBLE_CHECKS", "check_names", "run_verification"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyScale:
    """Problem sizes for the verification suites (defaults are full scale)."""

    entrywise: int = 200
    exact: int = 300
    seq: int = 2000
    poly: int = 60
    solver: int = 60
    trace: int = 30
    interlace: int = 10_000
    eigen_max: int = 100_000
    bounds_max: int = 100_000
    chain: int = 120
    quad_draws: int = 100
    extremal: tuple[int, ...] = (1, 2, 5, 10, 100)
    sqrt_ns: tuple[int, ...] = (10, 1_000, 100_000)
    seed: int = 0
    tol: float = 1e-12

    @classmethod
    def quick(cls, seed: int = 0, tol: float = 1e-12) -> "VerifyScale":
        return cls(
            entrywise=40,
            exact=60,
            seq=200,
            poly=20,
            solver=20,
            trace=10,
            interlace=300,
            eigen_max=2_000,
            bounds_max=2_000,
            chain=40,
            quad_draws=10,
            extremal=(1, 2, 5, 10),
            sqrt_ns=(10, 1_000),
            seed=seed,
            tol=tol,
        )


def _dense_plus_geometric(dense_to: int, stop: int, ratio: float = 2.0) -> list[int]:
    vals = list(range(1, min(dense_to, stop) + 1))
    x = float(max(dense_to, 1))
    while True:
        x *= ratio
        v = int(round(x))
        if v > stop:
            break
        if v > vals[-1]:
            vals.append(v)
    if vals[-1] != stop and stop > dense_to:
        vals.append(stop)
    return vals


def _shift_slack(m: int, tol: float) -> float:
    # The two bisections mirror each other exactly (half-integer diagonals
    # and dyadic midpoints are exact in floats), so measured deviation is 0;
    # the m-term only guards against a different libm/rounding environment.
    return 2.0 * tol + 1.0e-15 * m


# ---------------------------------------------------------------------------
# matrices


def _check_structural(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in range(1, scale.entrywise + 1):
        m_odd = (n + 1) // 2
        b, c = build_B(m_odd), build_C(m_odd)
        d, g = build_D(m_odd), build_G(m_odd)
        h, f, u = build_H(n), build_F(n), build_U(n)
        d_diag = d.diag_doubled.copy()
        if corrupted and n == min(17, scale.entrywise):
            d_diag[(n // 3)] += 1
        # shifted block: D = B - (1/2) I, common off-diagonal
        if not (
            np.array_equal(d_diag, b.diag_doubled - 1)
            and np.array_equal(d.offdiag_doubled, b.offdiag_doubled)
        ):
            return CheckResult(
                "matrix-structural-identities", False, f"shift identity fails at m={m_odd}"
            )
        # block difference: C - B = 2 G
        if not (
            np.array_equal(c.diag_doubled - b.diag_doubled, 2 * g.diag_doubled)
            and np.array_equal(c.offdiag_doubled - b.offdiag_doubled, 2 * g.offdiag_doubled)
        ):
            return CheckResult(
                "matrix-structural-identities", False, f"difference identity fails at m={m_odd}"
            )
        # parity split of the pentadiagonal form
        odd, even = split_A(build_A(n))
        if not (
            np.array_equal(odd.diag_doubled, build_B(m_odd).diag_doubled)
            and np.array_equal(odd.offdiag_doubled, build_B(m_odd).offdiag_doubled)
        ):
            return CheckResult("matrix-structural-identities", False, f"odd split fails at n={n}")
        if n >= 2:
            m_even = n // 2
            if not (
                np.array_equal(even.diag_doubled, build_C(m_even).diag_doubled)
                and np.array_equal(even.offdiag_doubled, build_C(m_even).offdiag_doubled)
            ):
                return CheckResult(
                    "matrix-structural-identities", False, f"even split fails at n={n}"
                )
        elif even is not None:
            return CheckResult("matrix-structural-identities", False, "n=1 even block not empty")
        # Gram identities against the bidiagonal factor, fully in integers:
        # products of true entries are quarters of products of doubled ones.
        ud, us = u.diag_doubled, u.superdiag_doubled
        uut_diag = ud * ud
        uut_diag[:-1] += us * us
        uut_off = us * ud[1:]
        if not (
            np.array_equal(uut_diag, 2 * f.diag_doubled)
            and np.array_equal(uut_off, 2 * f.offdiag_doubled)
        ):
            return CheckResult("matrix-structural-identities", False, f"U U^T fails at n={n}")
        utu_diag = ud * ud
        utu_diag[1:] += us * us
        utu_off = ud[:-1] * us
        if not (
            np.array_equal(utu_diag, 2 * h.diag_doubled)
            and np.array_equal(utu_off, 2 * h.offdiag_doubled)
        ):
            return CheckResult("matrix-structural-identities", False, f"U^T U fails at n={n}")
        # Gram matrix is the quarter-sum of the two blocks (equal sizes)
        bb, cc = build_B(n), build_C(n)
        hh = build_H(n)
        if not (
            np.array_equal(bb.diag_doubled + cc.diag_doubled, 4 * hh.diag_doubled)
            and np.array_equal(bb.offdiag_doubled + cc.offdiag_doubled, 4 * hh.offdiag_doubled)
        ):
            return CheckResult("matrix-structural-identities", False, f"quarter-sum fails at n={n}")
    return CheckResult(
        "matrix-structural-identities", True, f"entrywise identities exact for n <= {scale.entrywise}"
    )


# ---------------------------------------------------------------------------
# exact sequences


def _check_determinants(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    table = exact.det_D_seq(scale.exact)
    values = list(table.values)
    if corrupted:
        values[min(5, len(values)) - 1] += 1
    for m in range(1, scale.exact + 1):
        if values[m - 1] != exact.det_D_closed(m):
            return CheckResult(
                "determinant-closed-form", False, f"det mismatch with closed form at m={m}"
            )
    gt = exact.det_G_seq(scale.exact)
    fact = 1
    for m in range(1, scale.exact + 1):
        fact *= m
        if gt[m] != fact:
            return CheckResult(
                "determinant-closed-form", False, f"difference-block det is not {m}! at m={m}"
            )
    return CheckResult(
        "determinant-closed-form", True, f"both closed forms exact for m <= {scale.exact}"
    )


def _check_seeds(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    from fractions import Fraction as F

    seeds = [
        (exact.det_D(1), F(1, 2), "detD(1)"),
        (exact.det_D(2), F(9, 4), "detD(2)"),
        (exact.delta_seq(2)[1], F(13, 2), "delta(1)"),
        (exact.delta_seq(2)[2], F(389, 4), "delta(2)"),
        (exact.u_seq(1)[1], F(26, 9), "u(1)"),
        (exact.y_seq(1)[1], F(2), "y(1)"),
        (exact.q1(1), F(2), "q1(1)"),
        (exact.det_G(1), F(1), "detG(1)"),
        (exact.det_G(2), F(2), "detG(2)"),
    ]
    for got, want, label in seeds:
        if got != want:
            return CheckResult("seed-values", False, f"{label} = {got}, expected {want}")
    return CheckResult("seed-values", True, "all nine seeds exact")


def _bound_detail(rep) -> str:
    if rep.passed:
        return f"indices up to {rep.max_index} hold, min margin {rep.min_margin:.3e}"
    return f"first violation at index {rep.first_violation}"


def _check_y_bounds(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    rep = exact.check_y_bounds(scale.seq)
    return CheckResult("y-log-sandwich", rep.passed, _bound_detail(rep))


def _check_q1_bound(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    rep = exact.check_q1_bound(scale.seq)
    return CheckResult("q1-log-bound", rep.passed, _bound_detail(rep))


def _check_u_bound(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    rep = exact.check_u_lower_bound(scale.seq)
    return CheckResult("u-log-lower-bound", rep.passed, _bound_detail(rep))


def _check_delta_linkages(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    kmax = scale.exact
    deltas = exact.delta_seq(kmax)
    dets = exact.det_D_seq(kmax + 1)
    us = exact.u_seq(kmax)
    from fractions import Fraction as F

    for k in range(1, kmax + 1):
        if us[k] != deltas[k] / dets[k + 1]:
            return CheckResult("delta-linkages", False, f"ratio identity fails at k={k}")
        if k >= 2:
            lhs = deltas[k] - F((2 * k + 1) ** 2, 2) * deltas[k - 1]
            if lhs != F(2**k * math.factorial(k) ** 2):
                return CheckResult("delta-linkages", False, f"offset identity fails at k={k}")
    return CheckResult("delta-linkages", True, f"both identities exact for k <= {kmax}")


def _check_qpoly(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for m in range(0, scale.poly + 1):
        poly = exact.q_polynomial(m)
        if poly.evaluate(0) != 1:
            return CheckResult("qpoly-coefficients", False, f"Q_{m}(0) != 1")
        if any(c <= 0 for c in poly.coeffs[1:]):
            return CheckResult(
                "qpoly-coefficients", False, f"nonpositive coefficient magnitude at m={m}"
            )
        if m >= 1 and poly.trace_of_inverse != exact.q1(m):
            return CheckResult(
                "qpoly-coefficients", False, f"linear coefficient != trace sum at m={m}"
            )
    return CheckResult(
        "qpoly-coefficients", True, f"normalization, positivity, trace for m <= {scale.poly}"
    )


# ---------------------------------------------------------------------------
# eigensolver


_FAMILIES = {
    "B": build_B,
    "C": build_C,
    "D": build_D,
    "G": build_G,
    "H": build_H,
    "F": build_F,
}


def _check_sturm_monotone(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    sizes = [s for s in (1, 2, 3, 5, 17, 101, 500) if s <= max(scale.interlace, 3)]
    for label, builder in _FAMILIES.items():
        for n in sizes:
            t = builder(n)
            d = t.diag_floats()
            b = t.offdiag_floats()
            span = float(d.max() + (2 * np.abs(b).max() if b.size else 0.0))
            lams = np.sort(rng.uniform(-1.0, span + 1.0, size=12))
            counts = [sturm_count(t, x) for x in lams]
            if any(c2 < c1 for c1, c2 in zip(counts, counts[1:])):
                return CheckResult(
                    "sturm-monotonicity", False, f"count not monotone for {label}({n})"
                )
            if sturm_count(t, span + 2.0) != n:
                return CheckResult(
                    "sturm-monotonicity", False, f"count above spectrum != size for {label}({n})"
                )
    return CheckResult("sturm-monotonicity", True, "counts monotone across families")


def _check_positive_definite(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    sizes = [s for s in (1, 2, 3, 5, 17, 101, 500) if s <= max(scale.interlace, 3)]
    for label, builder in _FAMILIES.items():
        for n in sizes:
            if sturm_count(builder(n), 0.0) != 0:
                return CheckResult(
                    "positive-definite-families", False, f"eigenvalue below 0 in {label}({n})"
                )
    return CheckResult("positive-definite-families", True, "no spectrum below zero")


def _check_shift_identity(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    worst = 0.0
    for m in _dense_plus_geometric(64, scale.eigen_max):
        lam_b = smallest_eigenvalue(build_B(m), scale.tol, positive_definite=True).lambda_min
        lam_d = smallest_eigenvalue(build_D(m), scale.tol, positive_definite=True).lambda_min
        if lam_b <= 0.5:
            return CheckResult("eigen-shift-identity", False, f"odd-block eigenvalue <= 1/2 at m={m}")
        err = abs(lam_b - 0.5 - lam_d)
        worst = max(worst, err)
        if err > _shift_slack(m, scale.tol):
            return CheckResult(
                "eigen-shift-identity", False, f"shift identity off by {err:.3e} at m={m}"
            )
    return CheckResult("eigen-shift-identity", True, f"max deviation {worst:.3e}")


def _check_interlacing(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    prev_b = None
    prev_c = None
    for m in range(1, scale.interlace + 1):
        lam_b = smallest_eigenvalue(build_B(m), scale.tol, positive_definite=True).lambda_min
        lam_c = smallest_eigenvalue(build_C(m), scale.tol, positive_definite=True).lambda_min
        if lam_c <= lam_b:
            return CheckResult("eigen-block-ordering", False, f"even block not above odd at m={m}")
        if prev_b is not None and not lam_b < prev_b:
            return CheckResult("eigen-interlacing", False, f"odd-block minimum not strictly decreasing at m={m}")
        if prev_c is not None and not lam_c < prev_c:
            return CheckResult("eigen-interlacing", False, f"even-block minimum not strictly decreasing at m={m}")
        prev_b, prev_c = lam_b, lam_c
    return CheckResult(
        "eigen-interlacing", True, f"strict decrease and block ordering for m <= {scale.interlace}"
    )


def _check_split_consistency(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in _dense_plus_geometric(64, min(scale.interlace, 10_000)):
        sp = smallest_eigenvalue_A(n, scale.tol)
        if not sp.min_from_odd:
            return CheckResult("eigen-split-consistency", False, f"minimum not from odd block at n={n}")
        direct = smallest_eigenvalue(build_B((n + 1) // 2), scale.tol, positive_definite=True)
        if abs(sp.chosen.lambda_min - direct.lambda_min) > 2 * scale.tol:
            return CheckResult("eigen-split-consistency", False, f"split disagrees with direct at n={n}")
    return CheckResult("eigen-split-consistency", True, "split minimum equals direct odd-block solve")


def _check_eigen_sandwich(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for m in _dense_plus_geometric(64, scale.eigen_max):
        if m < 2:
            continue
        lam = smallest_eigenvalue(build_D(m), scale.tol, positive_definite=True).lambda_min
        lm = math.log(m)
        lower = 4.0 / (lm * lm + 8.0 * lm + 8.0)
        upper = 1.0 / math.log(m + 0.5)
        if not lower < lam < upper:
            return CheckResult(
                "eigenvalue-log-sandwich", False, f"sandwich fails at m={m}: {lower} / {lam} / {upper}"
            )
    return CheckResult("eigenvalue-log-sandwich", True, f"strict sandwich up to m={scale.eigen_max}")


def _check_cross_solver(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for m in range(1, scale.solver + 1):
        dmat = build_D(m)
        bis = smallest_eigenvalue(dmat, scale.tol, positive_definite=True)
        lam_ii, vec = inverse_iteration(dmat, bis.lambda_min)
        if abs(lam_ii - bis.lambda_min) > 1e-10:
            return CheckResult(
                "cross-solver-agreement", False, f"inverse iteration disagrees at m={m}"
            )
        dense = np.linalg.eigvalsh(dmat.dense())
        if abs(dense[0] - bis.lambda_min) > 1e-10:
            return CheckResult("cross-solver-agreement", False, f"dense oracle disagrees at m={m}")
        if abs(qpoly_residual(m, bis.lambda_min)) > 1e-8:
            return CheckResult(
                "cross-solver-agreement", False, f"characteristic polynomial residual large at m={m}"
            )
    return CheckResult("cross-solver-agreement", True, f"three routes agree for m <= {scale.solver}")


def _check_trace_inverse(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for m in range(1, scale.trace + 1):
        dense_trace = float(np.trace(np.linalg.inv(build_D(m).dense())))
        exact_trace = float(exact.q1(m))
        rel = abs(dense_trace - exact_trace) / exact_trace
        if rel > 1e-8:
            return CheckResult("trace-of-inverse", False, f"relative error {rel:.3e} at m={m}")
    return CheckResult("trace-of-inverse", True, f"dense inverse trace matches for m <= {scale.trace}")


# ---------------------------------------------------------------------------
# constants


def _check_bounds_continuous(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in _dense_plus_geometric(64, scale.bounds_max):
        rec = hardy.continuous_constant(n, scale.tol)
        if not (rec.thm_lower - 1e-9 <= rec.constant <= rec.thm_upper + 1e-9):
            return CheckResult(
                "constant-bounds-continuous", False, f"bounds fail at n={n}: {rec.constant}"
            )
        if not rec.constant < 4.0:
            return CheckResult("constant-bounds-continuous", False, f"constant >= 4 at n={n}")
    return CheckResult("constant-bounds-continuous", True, f"two-sided bound up to n={scale.bounds_max}")


def _check_bounds_discrete(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in _dense_plus_geometric(64, scale.bounds_max):
        rec = hardy.discrete_constant(n, scale.tol)
        if n < 3:
            if rec.thm_lower is not None or rec.thm_upper is not None:
                return CheckResult(
                    "constant-bounds-discrete", False, f"bounds should be absent at n={n}"
                )
            continue
        if not (rec.thm_lower - 1e-9 <= rec.constant <= rec.thm_upper + 1e-9):
            return CheckResult(
                "constant-bounds-discrete", False, f"bounds fail at n={n}: {rec.constant}"
            )
        if not rec.constant < 4.0:
            return CheckResult("constant-bounds-discrete", False, f"constant >= 4 at n={n}")
    return CheckResult("constant-bounds-discrete", True, f"two-sided bound up to n={scale.bounds_max}")


def _check_monotone(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    grid = _dense_plus_geometric(100, scale.bounds_max)
    prev_c = prev_d = -np.inf
    for n in grid:
        c = hardy.continuous_constant(n, scale.tol).constant
        d = hardy.discrete_constant(n, scale.tol).constant
        if c < prev_c - 1e-12 or d < prev_d - 1e-12:
            return CheckResult("constant-monotonicity", False, f"monotonicity fails at n={n}")
        prev_c, prev_d = c, d
    return CheckResult("constant-monotonicity", True, f"nondecreasing on grid up to {grid[-1]}")


def _check_small_closed_forms(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    c1 = hardy.continuous_constant(1, scale.tol).constant
    c2 = hardy.continuous_constant(2, scale.tol).constant
    d1 = hardy.discrete_constant(1, scale.tol).constant
    d2 = hardy.discrete_constant(2, scale.tol).constant
    golden = (3.0 + math.sqrt(5.0)) / 4.0
    pairs = [
        (c1, 2.0, "c_1"),
        (c2, 2.0, "c_2"),
        (d1, 1.0, "d_1"),
        (d2, golden, "d_2"),
    ]
    for got, want, label in pairs:
        if abs(got - want) > 1e-12:
            return CheckResult("small-closed-forms", False, f"{label} = {got!r}, want {want!r}")
    f2, fx2 = hardy.quadrature_oracle(hardy.CoefficientVector.from_b([1.0]))
    if abs(f2 - 0.5) > 1e-10 or abs(fx2 - 1.0) > 1e-10:
        return CheckResult("small-closed-forms", False, "one-dimensional integrals off")
    return CheckResult("small-closed-forms", True, "c_1 = c_2 = 2, d_1 = 1, d_2 = (3+sqrt5)/4")


def _check_quadrature(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    worst = 0.0
    for n in range(1, hardy.QUADRATURE_MAX_N + 1):
        for _ in range(max(scale.quad_draws // hardy.QUADRATURE_MAX_N, 2)):
            cv = hardy.CoefficientVector.from_b(rng.standard_normal(n))
            alg = hardy.quadratic_forms(cv)
            quad = hardy.quadrature_oracle(cv)
            for a, q in zip(alg, quad):
                rel = abs(a - q) / max(abs(a), abs(q), 1e-30)
                worst = max(worst, rel)
                if rel > 1e-8:
                    return CheckResult(
                        "quadrature-agreement", False, f"forms disagree at n={n}: rel {rel:.3e}"
                    )
    return CheckResult("quadrature-agreement", True, f"worst relative gap {worst:.3e}")


def _check_extremal(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in scale.extremal:
        sample = hardy.extremal_reconstruction(n, "discrete", scale.tol)
        quot = hardy.discrete_quotient(sample)
        dn = hardy.discrete_constant(n, scale.tol).constant
        if abs(quot - dn) > 1e-8:
            return CheckResult(
                "extremal-consistency", False, f"discrete quotient off by {abs(quot - dn):.3e} at n={n}"
            )
        cv = hardy.extremal_reconstruction(n, "continuous", scale.tol)
        f2, fx2 = hardy.quadratic_forms(cv)
        lam_a = smallest_eigenvalue_A(n, scale.tol).chosen.lambda_min
        if abs(f2 / fx2 - 0.5 * lam_a) > 1e-10:
            return CheckResult(
                "extremal-consistency", False, f"continuous ratio off at n={n}"
            )
    for n in scale.sqrt_ns:
        quot = hardy.discrete_quotient(hardy.sqrt_test_sequence(n))
        if not quot > hardy.harmonic_lower_bound(n):
            return CheckResult(
                "extremal-consistency", False, f"sqrt test sequence below harmonic bound at n={n}"
            )
    return CheckResult("extremal-consistency", True, "reconstructions achieve their constants")


def _check_random_quotient(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    for n in (1, 2, 3, 5, 10, 100):
        dn = hardy.discrete_constant(n, scale.tol).constant
        for _ in range(25):
            a = rng.standard_normal(n)
            if not np.any(a):
                continue
            if hardy.discrete_quotient(a) > dn + 1e-9:
                return CheckResult(
                    "random-quotient-bound", False, f"quotient exceeds the constant at n={n}"
                )
    return CheckResult("random-quotient-bound", True, "random quotients stay below the constant")


def _check_laguerre(scale: VerifyScale, rng, corrupted: bool) -> CheckResult:
    xs = np.linspace(0.5, 39.5, 20)
    for alpha in (0.0, 1.0, 3.0):
        for k in range(0, 31):
            # value at zero is a binomial coefficient
            want = math.comb(k + int(alpha), k)
            got = hardy.laguerre_eval(k, alpha, 0.0)
            if abs(got - want) > 1e-12 * max(1.0, want):
                return CheckResult("laguerre-identities", False, f"value at 0 fails k={k}")
            vals = hardy.laguerre_eval(k, alpha, xs)
            up = hardy.laguerre_eval(k, alpha + 1.0, xs)
            # summation identity: sum_{j<=k} L_j^(a) = L_k^(a+1)
            total = np.zeros_like(xs)
            for j in range(k + 1):
                total += hardy.laguerre_eval(j, alpha, xs)
            if not np.allclose(total, up, rtol=1e-10, atol=1e-9):
                return CheckResult("laguerre-identities", False, f"summation fails k={k}")
            # difference identity: L_k^(a) = L_k^(a+1) - L_{k-1}^(a+1)
            if k >= 1:
                diff = up - hardy.laguerre_eval(k - 1, alpha + 1.0, xs)
                if not np.allclose(vals, diff, rtol=1e-10, atol=1e-9):
                    return CheckResult("laguerre-identities", False, f"difference fails k={k}")
                # derivative identity via central differences
                h = 1e-6
                fd = (
                    hardy.laguerre_eval(k, alpha, xs + h)
                    - hardy.laguerre_eval(k, alpha, xs - h)
                ) / (2 * h)
                target = -hardy.laguerre_eval(k - 1, alpha + 1.0, xs)
                err = np.max(np.abs(fd - target) / np.maximum(1.0, np.abs(target)))
                if err > 1e-6:
                    return CheckResult("laguerre-identities", False, f"derivative fails k={k}")
    # orthonormality: integral of exp(-x) L_k^2 is 1
    for k in (0, 1, 5, 12, 30):
        nodes, weights = np_laguerre_gauss(k + 1)
        val = float(weights @ hardy.laguerre_eval(k, 0.0, nodes) ** 2)
        if abs(val - 1.0) > 1e-8:
            return CheckResult("laguerre-identities", False, f"normalization fails k={k}")
    return CheckResult("laguerre-identities", True, "value, summation, difference, derivative, norm")


def np_laguerre_gauss(npts: int):
    from numpy.polynomial.laguerre import laggauss

    return laggauss(npts)


# ---------------------------------------------------------------------------
# registry


_CHECKS = [
    ("matrix-structural-identities", _check_structural),
    ("determinant-closed-form", _check_determinants),
    ("seed-values", _check_seeds),
    ("y-log-sandwich", _check_y_bounds),
    ("q1-log-bound", _check_q1_bound),
    ("u-log-lower-bound", _check_u_bound),
    ("delta-linkages", _check_delta_linkages),
    ("qpoly-coefficients", _check_qpoly),
    ("sturm-monotonicity", _check_sturm_monotone),
    ("positive-definite-families", _check_positive_definite),
    ("eigen-shift-identity", _check_shift_identity),
    ("eigen-interlacing", _check_interlacing),
    ("eigen-split-consistency", _check_split_consistency),
    ("eigenvalue-log-sandwich", _check_eigen_sandwich),
    ("cross-solver-agreement", _check_cross_solver),
    ("trace-of-inverse", _check_trace_inverse),
    ("constant-bounds-continuous", _check_bounds_continuous),
    ("constant-bounds-discrete", _check_bounds_discrete),
    ("constant-monotonicity", _check_monotone),
    ("small-closed-forms", _check_small_closed_forms),
    ("quadrature-agreement", _check_quadrature),
    ("extremal-consistency", _check_extremal),
    ("random-quotient-bound", _check_random_quotient),
    ("laguerre-identities", _check_laguerre),
]

#: Checks that accept the deliberate-corruption negative-control hook.
CORRUPTIBLE_CHECKS = ("matrix-structural-identities", "determinant-closed-form")


def check_names() -> list[str]:
    return [name for name, _ in _CHECKS]


def run_verification(
    scale: VerifyScale | None = None,
    *,
    corrupt: str | None = None,
    names: list[str] | None = None,
) -> list[CheckResult]:
    """Run the named verification suites and return one result per check.

    ``corrupt`` names a check from :data:`CORRUPTIBLE_CHECKS` whose input is
    deliberately damaged; the run then demonstrates that the check catches
    the damage (its result comes back failed).
    """
    scale = scale or VerifyScale()
    if corrupt is not None and corrupt not in CORRUPTIBLE_CHECKS:
        raise ValueError(f"corruption hook supports only {CORRUPTIBLE_CHECKS}")
    results = []
    for idx, (name, func) in enumerate(_CHECKS):
        if names is not None and name not in names:
            continue
        rng = np.random.default_rng([scale.seed, idx])
        results.append(func(scale, rng, corrupt == name))
    return results
