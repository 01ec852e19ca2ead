"""Smallest-eigenvalue machinery for the symmetric tridiagonal families.

Bisection on the negative-pivot count of the shifted LDL^T factorization
produces a certified enclosure: the count at the returned ``bracket_lo`` is 0
and at ``bracket_hi`` is at least 1, so the smallest eigenvalue of the
float64 matrix lies inside the bracket.  The pivot recurrence runs as a
compiled kernel so that a full solve at size 10^5 stays well under a second.

``inverse_iteration`` is an independent route to the same eigenvalue (shifted
inverse power iteration with banded partially-pivoted solves); it also
recovers the eigenvector needed for extremizer reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

from .matrices import TridiagonalMatrix, build_A, split_A
from .exact import q_polynomial

__all__ = [
    "EigenSolveError",
    "EigenResult",
    "Eigenvector",
    "SplitEigenResult",
    "sturm_count",
    "smallest_eigenvalue",
    "smallest_eigenvalue_A",
    "inverse_iteration",
    "qpoly_residual",
    "warmup",
]

_EPS = float(np.finfo(np.float64).eps)


class EigenSolveError(RuntimeError):
    """Raised when a bracket cannot be certified or an iteration stalls."""


@dataclass(frozen=True)
class EigenResult:
    """Certified smallest-eigenvalue enclosure.

    ``lambda_min`` is the midpoint of the final bracket; the pivot-sign count
    at ``bracket_lo`` is 0 and at ``bracket_hi`` is >= 1.
    """

    lambda_min: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    matrix_size: int


@dataclass(frozen=True)
class Eigenvector:
    """Unit eigenvector estimate with its residual norm ||Tv - lambda v||."""

    values: np.ndarray
    residual: float


@dataclass(frozen=True)
class SplitEigenResult:
    """Smallest eigenvalue of the pentadiagonal form via its parity split."""

    chosen: EigenResult
    odd_block: EigenResult
    even_block: EigenResult | None
    min_from_odd: bool


@njit(cache=True, nogil=True)
def _pivot_sign_count(diag, beta_sq, shift, pivot_floor):
    count = 0
    q = diag[0] - shift
    if q == 0.0:
        q = -pivot_floor
    if q < 0.0:
        count += 1
    for k in range(1, diag.shape[0]):
        q = (diag[k] - shift) - beta_sq[k - 1] / q
        if q == 0.0:
            q = -pivot_floor
        if q < 0.0:
            count += 1
    return count


def _solver_arrays(t: TridiagonalMatrix) -> tuple[np.ndarray, np.ndarray, float]:
    d = t.diag_floats()
    b = t.offdiag_floats()
    scale = float(np.abs(d).max())
    if b.size:
        scale = max(scale, float(np.abs(b).max()))
    if scale == 0.0:
        scale = 1.0
    return d, b * b, scale


def sturm_count(t: TridiagonalMatrix, lam: float) -> int:
    """Number of eigenvalues of ``t`` strictly below ``lam``.

    A zero pivot in the sign-count recurrence is replaced by -eps * scale
    (scale = largest entry magnitude), which at worst counts an eigenvalue
    equal to ``lam`` as lying below it.
    """
    d, beta_sq, scale = _solver_arrays(t)
    return int(_pivot_sign_count(d, beta_sq, float(lam), _EPS * scale))


def smallest_eigenvalue(
    t: TridiagonalMatrix,
    tol: float = 1e-12,
    *,
    positive_definite: bool = False,
    max_iterations: int = 200,
) -> EigenResult:
    """Certified bisection for the smallest eigenvalue.

    The initial bracket is [min Gershgorin disc edge, min diagonal entry];
    with ``positive_definite`` the lower end is clamped at 0, and a nonzero
    count there reports the contradiction instead of silently bisecting.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    d, beta_sq, scale = _solver_arrays(t)
    pivot_floor = _EPS * scale
    b_abs = np.sqrt(beta_sq)
    radius = np.zeros_like(d)
    if b_abs.size:
        radius[:-1] += b_abs
        radius[1:] += b_abs
    # Widen below the Gershgorin edge: the edge itself can coincide with the
    # smallest eigenvalue (every 1x1 matrix does), and the count at an exact
    # eigenvalue is 1, not 0.
    lo = float(np.min(d - radius)) - (pivot_floor * max(d.size, 4) + tol)
    if positive_definite:
        if _pivot_sign_count(d, beta_sq, 0.0, pivot_floor) != 0:
            raise EigenSolveError(
                "eigenvalue found below 0: matrix is not positive definite "
                "as assumed"
            )
        lo = max(lo, 0.0)
    hi = float(np.min(d))

    step = max(tol, 4.0 * _EPS * max(1.0, abs(lo)))
    expansions = 0
    while _pivot_sign_count(d, beta_sq, lo, pivot_floor) != 0:
        lo -= step
        step *= 2.0
        expansions += 1
        if expansions > 200:
            raise EigenSolveError("initial bracket does not enclose the spectrum")

    # The smallest eigenvalue is <= min(diag); push hi up until the strict
    # count certifies at least one eigenvalue below it.
    step = max(tol, 4.0 * _EPS * max(1.0, abs(hi)))
    expansions = 0
    while _pivot_sign_count(d, beta_sq, hi, pivot_floor) < 1:
        hi += step
        step *= 2.0
        expansions += 1
        if expansions > 200:
            raise EigenSolveError("initial bracket contains no eigenvalue")

    iterations = 0
    while hi - lo > tol:
        if iterations >= max_iterations:
            raise EigenSolveError(
                f"bisection exceeded {max_iterations} iterations without "
                f"reaching tol={tol}"
            )
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # float resolution exhausted; the bracket cannot shrink further
            if hi - lo > tol:
                raise EigenSolveError(
                    "requested tolerance is below float resolution here"
                )
            break
        if _pivot_sign_count(d, beta_sq, mid, pivot_floor) >= 1:
            hi = mid
        else:
            lo = mid
        iterations += 1

    return EigenResult(
        lambda_min=0.5 * (lo + hi),
        bracket_lo=lo,
        bracket_hi=hi,
        iterations=iterations,
        matrix_size=t.size,
    )


def smallest_eigenvalue_A(n: int, tol: float = 1e-12) -> SplitEigenResult:
    """Smallest eigenvalue of the size-n pentadiagonal form.

    Solves both parity blocks of the split and returns their minimum; the
    odd block is expected to win (``min_from_odd``), and by the block
    ordering the even block only serves as a cross-check.
    """
    odd, even = split_A(build_A(n))
    odd_res = smallest_eigenvalue(odd, tol, positive_definite=True)
    even_res = None
    if even is not None:
        even_res = smallest_eigenvalue(even, tol, positive_definite=True)
    min_from_odd = even_res is None or odd_res.lambda_min <= even_res.lambda_min
    chosen = odd_res if min_from_odd else even_res
    return SplitEigenResult(chosen, odd_res, even_res, min_from_odd)


def _tridiagonal_apply(d: np.ndarray, e: np.ndarray, v: np.ndarray) -> np.ndarray:
    out = d * v
    if e.size:
        out[:-1] += e * v[1:]
        out[1:] += e * v[:-1]
    return out


def inverse_iteration(
    t: TridiagonalMatrix,
    shift: float,
    maxiter: int = 50,
) -> tuple[float, Eigenvector]:
    """Shifted inverse power iteration on a tridiagonal matrix.

    ``shift`` should sit below the second-smallest eigenvalue (the certified
    bisection output is the natural choice); the iteration then converges to
    the ground pair.  Returns the Rayleigh-quotient eigenvalue and the unit
    eigenvector, oriented so its component sum is positive.
    """
    d = t.diag_floats()
    e = t.offdiag_floats()
    n = t.size
    norm_inf = float(np.max(np.abs(d) + (np.abs(e).max() * 2 if e.size else 0.0)))
    norm_inf = max(norm_inf, 1.0)
    if n == 1:
        return float(d[0]), Eigenvector(np.ones(1), 0.0)

    shift = float(shift)
    v = np.full(n, 1.0 / np.sqrt(n))
    target = 1e-13 * norm_inf
    lam_prev = None
    lam = 0.0
    resid = np.inf
    for _ in range(maxiter):
        ab = np.zeros((3, n))
        ab[0, 1:] = e
        ab[1, :] = d - shift
        ab[2, :-1] = e
        try:
            w = solve_banded((1, 1), ab, v)
        except np.linalg.LinAlgError:
            # exactly singular shift: nudge and retry
            shift -= max(abs(shift), 1.0) * 1e-14
            continue
        norm_w = float(np.linalg.norm(w))
        if not np.isfinite(norm_w) or norm_w == 0.0:
            raise EigenSolveError("inverse iteration produced a degenerate vector")
        v = w / norm_w
        tv = _tridiagonal_apply(d, e, v)
        lam = float(v @ tv)
        resid = float(np.linalg.norm(tv - lam * v))
        if resid <= target:
            break
        if lam_prev is not None and abs(lam - lam_prev) <= 2 * _EPS * max(1.0, abs(lam)):
            if resid <= 1e-8 * norm_inf:
                break
        lam_prev = lam
    else:
        raise EigenSolveError(
            f"inverse iteration did not converge in {maxiter} steps "
            f"(residual {resid:.3e})"
        )
    if float(np.sum(v)) < 0.0:
        v = -v
    v = v.copy()
    v.setflags(write=False)
    return lam, Eigenvector(v, resid)


def qpoly_residual(m: int, lam: float) -> float:
    """Value of the exact normalized characteristic polynomial at ``lam``.

    The float argument is converted to an exact rational, the polynomial is
    evaluated in exact arithmetic, and only the final value is rounded; a
    tiny result certifies that ``lam`` sits next to a true root.
    """
    return float(q_polynomial(m).evaluate(lam))


def warmup() -> None:
    """Compile and exercise the solver kernels on a tiny input."""
    from .matrices import build_D

    smallest_eigenvalue(build_D(3), 1e-10, positive_definite=True)
