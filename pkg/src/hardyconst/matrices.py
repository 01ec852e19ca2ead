"""Structured matrix families behind the finite-dimensional Hardy constants.

Every family here has closed-form entries that are integers or half-integers,
so a matrix is stored as coefficient vectors of *doubled* entries in 64-bit
integers: construction involves no floating-point rounding, memory stays
O(n), and the solver gets exact float64 views on demand (doubled entries stay
far below 2**53 for all supported sizes).  Matrices are never densified in
library code; ``dense()`` exists for small oracle computations only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "TridiagonalMatrix",
    "PentadiagonalMatrix",
    "BidiagonalMatrix",
    "build_A",
    "build_B",
    "build_C",
    "build_D",
    "build_G",
    "build_H",
    "build_F",
    "build_U",
    "split_A",
]


def _freeze(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64, copy=True)
    if arr.ndim != 1:
        raise ValueError("coefficient vectors must be one-dimensional")
    arr.setflags(write=False)
    return arr


def _doubled_from_entries(entries, what: str) -> list[int]:
    doubled = []
    for e in entries:
        tw = 2 * Fraction(e)
        if tw.denominator != 1:
            raise ValueError(f"{what} entry {e!r} is not an integer or half-integer")
        doubled.append(tw.numerator)
    return doubled


def _fraction_view(doubled: np.ndarray) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(v), 2) for v in doubled)


def _require_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"size must be at least 1, got {n}")


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    """Symmetric tridiagonal matrix with half-integer entries.

    ``diag_doubled[k]`` holds twice the (k+1)-th diagonal entry and
    ``offdiag_doubled[k]`` twice the coupling between 1-based indices
    k+1 and k+2.
    """

    diag_doubled: np.ndarray
    offdiag_doubled: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag_doubled", _freeze(self.diag_doubled))
        object.__setattr__(self, "offdiag_doubled", _freeze(self.offdiag_doubled))
        _require_size(self.diag_doubled.size)
        if self.offdiag_doubled.size != self.diag_doubled.size - 1:
            raise ValueError("offdiag length must be size - 1")

    @classmethod
    def from_entries(cls, diag, offdiag) -> "TridiagonalMatrix":
        """Build from exact entries (integers or half-integers)."""
        return cls(
            _doubled_from_entries(diag, "diag"),
            _doubled_from_entries(offdiag, "offdiag"),
        )

    @property
    def size(self) -> int:
        return int(self.diag_doubled.size)

    @property
    def diag(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.diag_doubled)

    @property
    def offdiag(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.offdiag_doubled)

    def diag_floats(self) -> np.ndarray:
        return self.diag_doubled / 2.0

    def offdiag_floats(self) -> np.ndarray:
        return self.offdiag_doubled / 2.0

    def dense(self) -> np.ndarray:
        """Dense float64 form; intended for small oracle computations only."""
        n = self.size
        out = np.zeros((n, n))
        out[np.arange(n), np.arange(n)] = self.diag_floats()
        if n > 1:
            idx = np.arange(n - 1)
            off = self.offdiag_floats()
            out[idx, idx + 1] = off
            out[idx + 1, idx] = off
        return out

    def __repr__(self) -> str:
        return f"TridiagonalMatrix(size={self.size})"


@dataclass(frozen=True, eq=False)
class PentadiagonalMatrix:
    """Symmetric matrix whose only nonzero off-diagonal band sits at offset 2.

    ``offdiag2_doubled[k]`` holds twice the coupling between 1-based indices
    k+1 and k+3.
    """

    diag_doubled: np.ndarray
    offdiag2_doubled: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag_doubled", _freeze(self.diag_doubled))
        object.__setattr__(self, "offdiag2_doubled", _freeze(self.offdiag2_doubled))
        _require_size(self.diag_doubled.size)
        if self.offdiag2_doubled.size != max(self.diag_doubled.size - 2, 0):
            raise ValueError("offdiag2 length must be size - 2")

    @property
    def size(self) -> int:
        return int(self.diag_doubled.size)

    @property
    def diag(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.diag_doubled)

    @property
    def offdiag2(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.offdiag2_doubled)

    def diag_floats(self) -> np.ndarray:
        return self.diag_doubled / 2.0

    def offdiag2_floats(self) -> np.ndarray:
        return self.offdiag2_doubled / 2.0

    def dense(self) -> np.ndarray:
        """Dense float64 form for small oracle computations."""
        n = self.size
        out = np.zeros((n, n))
        out[np.arange(n), np.arange(n)] = self.diag_floats()
        if n > 2:
            idx = np.arange(n - 2)
            off = self.offdiag2_floats()
            out[idx, idx + 2] = off
            out[idx + 2, idx] = off
        return out

    def __repr__(self) -> str:
        return f"PentadiagonalMatrix(size={self.size})"


@dataclass(frozen=True, eq=False)
class BidiagonalMatrix:
    """Upper bidiagonal matrix (diagonal plus first superdiagonal)."""

    diag_doubled: np.ndarray
    superdiag_doubled: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag_doubled", _freeze(self.diag_doubled))
        object.__setattr__(self, "superdiag_doubled", _freeze(self.superdiag_doubled))
        _require_size(self.diag_doubled.size)
        if self.superdiag_doubled.size != self.diag_doubled.size - 1:
            raise ValueError("superdiag length must be size - 1")

    @property
    def size(self) -> int:
        return int(self.diag_doubled.size)

    @property
    def diag(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.diag_doubled)

    @property
    def superdiag(self) -> tuple[Fraction, ...]:
        return _fraction_view(self.superdiag_doubled)

    def dense(self) -> np.ndarray:
        n = self.size
        out = np.zeros((n, n))
        out[np.arange(n), np.arange(n)] = self.diag_doubled / 2.0
        if n > 1:
            idx = np.arange(n - 1)
            out[idx, idx + 1] = self.superdiag_doubled / 2.0
        return out

    def __repr__(self) -> str:
        return f"BidiagonalMatrix(size={self.size})"


def build_A(n: int) -> PentadiagonalMatrix:
    """Pentadiagonal quadratic-form matrix of the weighted continuous quotient.

    Diagonal entries k^2 - k + 1, offset-2 entries -k(k+1)/2, for 1-based k.
    """
    _require_size(n)
    k = np.arange(1, n + 1, dtype=np.int64)
    diag2 = 2 * (k * k - k + 1)
    j = np.arange(1, max(n - 2, 0) + 1, dtype=np.int64)
    off2 = -j * (j + 1)
    return PentadiagonalMatrix(diag2, off2)


def build_B(m: int) -> TridiagonalMatrix:
    """Odd-index block of the split pentadiagonal form.

    Diagonal 4k^2 - 6k + 3, off-diagonal -k(2k - 1).
    """
    _require_size(m)
    k = np.arange(1, m + 1, dtype=np.int64)
    j = np.arange(1, m, dtype=np.int64)
    return TridiagonalMatrix(8 * k * k - 12 * k + 6, -2 * j * (2 * j - 1))


def build_C(m: int) -> TridiagonalMatrix:
    """Even-index block of the split pentadiagonal form.

    Diagonal 4k^2 - 2k + 1, off-diagonal -k(2k + 1).
    """
    _require_size(m)
    k = np.arange(1, m + 1, dtype=np.int64)
    j = np.arange(1, m, dtype=np.int64)
    return TridiagonalMatrix(8 * k * k - 4 * k + 2, -2 * j * (2 * j + 1))


def build_D(m: int) -> TridiagonalMatrix:
    """Odd block shifted down by one half: diagonal 4k^2 - 6k + 5/2,
    off-diagonal -k(2k - 1).  Positive definite with smallest eigenvalue
    decaying like 1/log m."""
    _require_size(m)
    k = np.arange(1, m + 1, dtype=np.int64)
    j = np.arange(1, m, dtype=np.int64)
    return TridiagonalMatrix(8 * k * k - 12 * k + 5, -2 * j * (2 * j - 1))


def build_G(m: int) -> TridiagonalMatrix:
    """Half the difference of the even and odd blocks: diagonal 2k - 1,
    off-diagonal -k.  Its determinant is m factorial."""
    _require_size(m)
    k = np.arange(1, m + 1, dtype=np.int64)
    j = np.arange(1, m, dtype=np.int64)
    return TridiagonalMatrix(4 * k - 2, -2 * j)


def build_H(n: int) -> TridiagonalMatrix:
    """Gram matrix of the discrete quotient: diagonal 2k^2 - 2k + 1,
    off-diagonal -k^2.  The discrete constant is 1 over its smallest
    eigenvalue."""
    _require_size(n)
    k = np.arange(1, n + 1, dtype=np.int64)
    j = np.arange(1, n, dtype=np.int64)
    return TridiagonalMatrix(4 * k * k - 4 * k + 2, -2 * j * j)


def build_F(n: int) -> TridiagonalMatrix:
    """Companion form of the discrete quotient (same spectrum as the Gram
    matrix): diagonal 2k^2 except n^2 in the last slot, off-diagonal
    -k(k + 1)."""
    _require_size(n)
    k = np.arange(1, n + 1, dtype=np.int64)
    diag2 = 4 * k * k
    diag2 = diag2.copy()
    diag2[-1] = 2 * n * n
    j = np.arange(1, n, dtype=np.int64)
    return TridiagonalMatrix(diag2, -2 * j * (j + 1))


def build_U(n: int) -> BidiagonalMatrix:
    """Bidiagonal difference factor: diagonal k, superdiagonal -k.

    The Gram matrix equals U^T U and the companion form equals U U^T.
    """
    _require_size(n)
    k = np.arange(1, n + 1, dtype=np.int64)
    j = np.arange(1, n, dtype=np.int64)
    return BidiagonalMatrix(2 * k, -2 * j)


def split_A(a: PentadiagonalMatrix) -> tuple[TridiagonalMatrix, TridiagonalMatrix | None]:
    """Split the pentadiagonal form into its odd/even permutation blocks.

    Indices of like parity only couple at offset 2, so reordering as
    (1, 3, 5, ..., 2, 4, 6, ...) block-diagonalizes the matrix into two
    tridiagonal blocks.  The odd block always exists; the even block is
    ``None`` when the matrix is 1x1.

    Raises ``ValueError`` if the entries do not match the ``build_A``
    pattern, which signals misuse (the split is only meaningful for this
    family).
    """
    n = a.size
    expected = build_A(n)
    if not (
        np.array_equal(a.diag_doubled, expected.diag_doubled)
        and np.array_equal(a.offdiag2_doubled, expected.offdiag2_doubled)
    ):
        raise ValueError("matrix entries do not match the build_A family pattern")
    odd = TridiagonalMatrix(a.diag_doubled[0::2], a.offdiag2_doubled[0::2])
    if n < 2:
        return odd, None
    even = TridiagonalMatrix(a.diag_doubled[1::2], a.offdiag2_doubled[1::2])
    return odd, even
