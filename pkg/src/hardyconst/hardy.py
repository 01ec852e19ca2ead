"""Best constants of the finite-dimensional Hardy inequalities.

Two settings are covered.  The discrete inequality bounds the squared
partial-sum averages of a real sequence by a multiple d_n of its squared
norm; the continuous one bounds the weighted quotient over integrands whose
primitive is exp(-x/2) times a polynomial vanishing at 0, with best constant
c_n.  Both constants reduce to smallest eigenvalues of the structured
tridiagonal families in :mod:`hardyconst.matrices`:

    c_n = 4 / (2 lambda_min(D_m) + 1),  m = floor((n+1)/2),
    d_n = 1 / lambda_min(H_n),

and both increase to the classical constant 4 with an explicit two-sided
logarithmic bound on the gap.  This module also provides the quotient
evaluators themselves, a Gauss-Laguerre quadrature oracle for the continuous
quadratic forms, and extremizer reconstruction from solver eigenvectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import laguerre as np_laguerre
from numpy.polynomial import Polynomial

from .eigensolve import inverse_iteration, smallest_eigenvalue
from .matrices import build_A, build_D, build_F, build_H, split_A

__all__ = [
    "HardyRecord",
    "CoefficientVector",
    "SequenceSample",
    "theorem_bounds_continuous",
    "theorem_bounds_discrete",
    "continuous_constant",
    "discrete_constant",
    "discrete_quotient",
    "sqrt_test_sequence",
    "harmonic_lower_bound",
    "laguerre_eval",
    "quadratic_forms",
    "quadrature_oracle",
    "extremal_reconstruction",
    "QUADRATURE_MAX_N",
]

#: The quadrature oracle is a small-scale arbiter; larger sizes are the
#: eigensolver's job.
QUADRATURE_MAX_N = 12


@dataclass(frozen=True)
class HardyRecord:
    """One computed constant together with its certificates.

    ``thm_lower``/``thm_upper`` are the proven logarithmic bounds; they are
    ``None`` for the discrete constant at n < 3, where the two-sided bound
    is not asserted.
    """

    n: int
    kind: str
    constant: float
    thm_lower: float | None
    thm_upper: float | None
    lambda_min: float
    m_used: int
    iterations: int
    tol: float


def theorem_bounds_continuous(n: int) -> tuple[float, float]:
    """Two-sided bound 4(1 - 2/(L+2)) <= c_n <= 4(1 - 8/(L+4)^2) with
    L = ln((n+1)/2); valid for every n >= 1."""
    ell = math.log((n + 1) / 2)
    return 4.0 * (1.0 - 2.0 / (ell + 2.0)), 4.0 * (1.0 - 8.0 / (ell + 4.0) ** 2)


def theorem_bounds_discrete(n: int) -> tuple[float | None, float | None]:
    """Two-sided bound 4(1 - 4/(L+4)) <= d_n <= 4(1 - 8/(L+4)^2) with
    L = ln(n), asserted for n >= 3 only."""
    if n < 3:
        return None, None
    ell = math.log(n)
    return 4.0 * (1.0 - 4.0 / (ell + 4.0)), 4.0 * (1.0 - 8.0 / (ell + 4.0) ** 2)


def continuous_constant(n: int, tol: float = 1e-12) -> HardyRecord:
    """Best constant of the weighted continuous inequality of dimension n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = (n + 1) // 2
    res = smallest_eigenvalue(build_D(m), tol, positive_definite=True)
    lam = res.lambda_min
    lower, upper = theorem_bounds_continuous(n)
    return HardyRecord(
        n=n,
        kind="continuous",
        constant=4.0 / (2.0 * lam + 1.0),
        thm_lower=lower,
        thm_upper=upper,
        lambda_min=lam,
        m_used=m,
        iterations=res.iterations,
        tol=tol,
    )


def discrete_constant(n: int, tol: float = 1e-12) -> HardyRecord:
    """Best constant of the discrete inequality on sequences of length n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    res = smallest_eigenvalue(build_H(n), tol, positive_definite=True)
    lam = res.lambda_min
    lower, upper = theorem_bounds_discrete(n)
    return HardyRecord(
        n=n,
        kind="discrete",
        constant=1.0 / lam,
        thm_lower=lower,
        thm_upper=upper,
        lambda_min=lam,
        m_used=n,
        iterations=res.iterations,
        tol=tol,
    )


@dataclass(frozen=True)
class SequenceSample:
    """A finite real sequence a_1..a_n fed to the discrete quotient."""

    a: np.ndarray

    def __post_init__(self):
        arr = np.array(self.a, dtype=np.float64, copy=True)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("sample must be a nonempty one-dimensional vector")
        if not np.all(np.isfinite(arr)):
            raise ValueError("sample entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)

    @property
    def size(self) -> int:
        return int(self.a.size)


def discrete_quotient(sample) -> float:
    """Rayleigh quotient of the discrete inequality:
    sum_k ((a_1 + ... + a_k)/k)^2 divided by sum_k a_k^2.

    Accepts a :class:`SequenceSample` or any 1-d array; rejects the zero
    vector, for which the quotient is undefined.
    """
    a = sample.a if isinstance(sample, SequenceSample) else np.asarray(sample, float)
    if a.ndim != 1 or a.size < 1:
        raise ValueError("sample must be a nonempty one-dimensional vector")
    denom = float(a @ a)
    if denom == 0.0:
        raise ValueError("quotient undefined for the zero vector")
    averages = np.cumsum(a) / np.arange(1, a.size + 1)
    return float(averages @ averages) / denom


def sqrt_test_sequence(n: int) -> SequenceSample:
    """The classical near-extremal sequence a_j = sqrt(j) - sqrt(j-1),
    evaluated in the cancellation-free form 1/(sqrt(j) + sqrt(j-1))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    j = np.arange(1, n + 1, dtype=np.float64)
    return SequenceSample(1.0 / (np.sqrt(j) + np.sqrt(j - 1.0)))


def harmonic_lower_bound(n: int) -> float:
    """Lower bound 4 - 16/(H_n + 4) produced by the square-root test
    sequence, with H_n the n-th harmonic number (direct summation)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    h = float(np.sum(1.0 / np.arange(1, n + 1, dtype=np.float64)))
    return 4.0 - 16.0 / (h + 4.0)


def laguerre_eval(k: int, alpha: float, x):
    """Generalized Laguerre polynomial L_k^(alpha) at ``x`` by the standard
    three-term recurrence.  ``x`` may be a scalar or an array."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if alpha <= -1:
        raise ValueError("alpha must exceed -1")
    scalar = np.isscalar(x)
    xv = np.asarray(x, dtype=np.float64)
    prev = np.ones_like(xv)
    if k == 0:
        return float(prev) if scalar else prev
    cur = 1.0 + alpha - xv
    for j in range(1, k):
        prev, cur = cur, ((2 * j + 1 + alpha - xv) * cur - (j + alpha) * prev) / (j + 1)
    return float(cur) if scalar else cur


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients of a continuous-quotient candidate in two linked bases.

    ``b`` holds the coefficients in the difference basis built from
    consecutive Laguerre polynomials; ``t`` is its suffix-sum transform,
    b_k = t_k - t_{k+1} with t_{n+1} = 0.  The quadratic forms of the
    continuous quotient are diagonal-plus-offset-2 in ``t``.
    """

    b: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        b = np.array(self.b, dtype=np.float64, copy=True)
        t = np.array(self.t, dtype=np.float64, copy=True)
        if b.ndim != 1 or t.ndim != 1 or b.size != t.size or b.size < 1:
            raise ValueError("b and t must be one-dimensional vectors of equal size")
        b.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "t", t)

    @classmethod
    def from_b(cls, b) -> "CoefficientVector":
        b = np.asarray(b, dtype=np.float64)
        t = np.cumsum(b[::-1])[::-1]
        return cls(b, t)

    @classmethod
    def from_t(cls, t) -> "CoefficientVector":
        t = np.asarray(t, dtype=np.float64)
        b = t - np.append(t[1:], 0.0)
        return cls(b, t)

    @property
    def size(self) -> int:
        return int(self.b.size)


def quadratic_forms(coeffs: CoefficientVector) -> tuple[float, float]:
    """The pair (integral of f^2, integral of (F/x)^2) of the continuous
    quotient, evaluated algebraically: one half of the pentadiagonal form in
    ``t`` and the plain squared norm of ``t``."""
    t = coeffs.t
    n = coeffs.size
    a = build_A(n)
    s = float(a.diag_floats() @ (t * t))
    if n > 2:
        s += 2.0 * float(a.offdiag2_floats() @ (t[:-2] * t[2:]))
    return 0.5 * s, float(t @ t)


def quadrature_oracle(coeffs: CoefficientVector, npts: int = 32) -> tuple[float, float]:
    """Numeric-integration cross-check of :func:`quadratic_forms`.

    Reconstructs the primitive F(x) = exp(-x/2) p(x) from the coefficients,
    with p expressed in the Laguerre basis and converted to power form, then
    integrates f^2 = (F')^2 and (F/x)^2 by Gauss-Laguerre quadrature.  Both
    integrands are polynomials times exp(-x), so the rule is exact (up to
    rounding) once npts exceeds the polynomial degree; npts >= size + 1 is
    enforced.  Restricted to small sizes: this is an oracle, not a solver.
    """
    n = coeffs.size
    if n > QUADRATURE_MAX_N:
        raise ValueError(f"quadrature oracle is restricted to size <= {QUADRATURE_MAX_N}")
    if npts < n + 1:
        raise ValueError("npts must be at least size + 1 for an exact rule")
    b = coeffs.b
    lag_coeffs = np.zeros(n + 1)
    for k in range(1, n + 1):
        lag_coeffs[k] += k * b[k - 1]
        lag_coeffs[k - 1] -= k * b[k - 1]
    try:
        p = Polynomial(np_laguerre.lag2poly(lag_coeffs))
        nodes, weights = np_laguerre.laggauss(npts)
    except Exception as exc:  # pragma: no cover - numpy failure surface
        raise ValueError(f"quadrature rule construction failed: {exc}") from exc
    dp = p.deriv()
    px = p(nodes)
    fx = dp(nodes) - 0.5 * px
    integral_f2 = float(weights @ (fx * fx))
    ratio = px / nodes
    integral_f_over_x2 = float(weights @ (ratio * ratio))
    return integral_f2, integral_f_over_x2


def extremal_reconstruction(n: int, kind: str, tol: float = 1e-12):
    """Reconstruct a (near-)extremal input for the requested inequality.

    discrete:
        Ground eigenvector v of the companion form of the discrete quotient
        yields the sequence a_k = k v_k - (k-1) v_{k-1}, whose quotient
        equals d_n to solver accuracy.  Returns a :class:`SequenceSample`.

    continuous:
        Ground eigenvector of the odd split block, zero-padded on the even
        positions, is an eigenvector of the full pentadiagonal form; mapping
        t -> b gives coefficients whose quadratic-forms ratio equals half the
        smallest eigenvalue.  Returns a :class:`CoefficientVector`.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind == "discrete":
        f = build_F(n)
        res = smallest_eigenvalue(f, tol, positive_definite=True)
        _, vec = inverse_iteration(f, res.lambda_min)
        v = vec.values
        k = np.arange(1, n + 1, dtype=np.float64)
        a = k * v
        a[1:] -= k[:-1] * v[:-1]
        return SequenceSample(a)
    if kind == "continuous":
        odd, _ = split_A(build_A(n))
        res = smallest_eigenvalue(odd, tol, positive_definite=True)
        _, vec = inverse_iteration(odd, res.lambda_min)
        t = np.zeros(n)
        t[0::2] = vec.values
        return CoefficientVector.from_t(t)
    raise ValueError(f"kind must be 'discrete' or 'continuous', got {kind!r}")
