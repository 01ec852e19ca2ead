"""Exact integer and rational recurrences for the determinant, trace, and
characteristic-polynomial sequences attached to the shifted odd-block family.

Everything in this module is computed in exact arithmetic.  Sequences whose
denominators grow like squared double factorials are carried as scaled big
integers over a running common denominator, so scanning to index 2000 stays
cheap; values are surfaced as ``fractions.Fraction``.  The bound checkers
compare exact values against double-precision evaluations of logarithmic
expressions and insist on a safety margin of 1e-9 (except at the few indices
where the bound is attained exactly, which are verified in exact arithmetic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

__all__ = [
    "SequenceTable",
    "QPolynomial",
    "BoundReport",
    "double_factorial",
    "det_D",
    "det_D_closed",
    "det_D_seq",
    "det_G",
    "det_G_seq",
    "y_seq",
    "q1",
    "q1_seq",
    "delta_seq",
    "u_seq",
    "q_polynomial",
    "check_y_bounds",
    "check_q1_bound",
    "check_u_lower_bound",
    "MARGIN",
    "MAX_POLY_DEGREE",
]

#: Safety margin demanded of every strict logarithmic inequality check.
MARGIN = 1e-9

#: Default cap on the characteristic-polynomial degree.
MAX_POLY_DEGREE = 512

_TABLE_NAMES = frozenset({"y", "q1", "delta", "u", "detD", "detG"})


@dataclass(frozen=True)
class SequenceTable:
    """Exact values of one named sequence, indexed from its natural start."""

    name: str
    start: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.name not in _TABLE_NAMES:
            raise ValueError(f"unknown sequence name {self.name!r}")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last_index(self) -> int:
        return self.start + len(self.values) - 1

    def __getitem__(self, index: int) -> Fraction:
        if not self.start <= index <= self.last_index:
            raise IndexError(
                f"{self.name} table covers indices {self.start}..{self.last_index}"
            )
        return self.values[index - self.start]

    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))


def double_factorial(n: int) -> int:
    """n!! as an exact integer, with n!! = 1 for n <= 0."""
    result = 1
    for i in range(n, 1, -2):
        result *= i
    return result


def _require_index(value: int, minimum: int, what: str) -> None:
    if value < minimum:
        raise ValueError(f"{what} must be at least {minimum}, got {value}")


# ---------------------------------------------------------------------------
# determinant sequences


def det_D(m: int) -> Fraction:
    """Determinant of the shifted odd block, via its three-term recurrence.

    Seeds 1/2 and 9/4; thereafter
    det_m = (4m^2 - 6m + 5/2) det_{m-1} - (m-1)^2 (2m-3)^2 det_{m-2}.
    """
    _require_index(m, 1, "m")
    prev = Fraction(1, 2)
    if m == 1:
        return prev
    cur = Fraction(9, 4)
    for j in range(3, m + 1):
        prev, cur = cur, Fraction(8 * j * j - 12 * j + 5, 2) * cur - (
            (j - 1) ** 2 * (2 * j - 3) ** 2
        ) * prev
    return cur


def det_D_closed(m: int) -> Fraction:
    """Closed form ((2m-1)!!)^2 / 2^m for the same determinant."""
    _require_index(m, 1, "m")
    return Fraction(double_factorial(2 * m - 1) ** 2, 2**m)


def det_D_seq(mmax: int) -> SequenceTable:
    _require_index(mmax, 1, "mmax")
    vals = [Fraction(1, 2)]
    if mmax >= 2:
        vals.append(Fraction(9, 4))
    for j in range(3, mmax + 1):
        vals.append(
            Fraction(8 * j * j - 12 * j + 5, 2) * vals[-1]
            - ((j - 1) ** 2 * (2 * j - 3) ** 2) * vals[-2]
        )
    return SequenceTable("detD", 1, tuple(vals))


def det_G(m: int) -> Fraction:
    """Determinant of the difference block; equals m factorial."""
    _require_index(m, 1, "m")
    prev, cur = 1, 2
    if m == 1:
        return Fraction(1)
    for k in range(2, m):
        prev, cur = cur, (2 * k + 1) * cur - k * k * prev
    return Fraction(cur)


def det_G_seq(mmax: int) -> SequenceTable:
    _require_index(mmax, 1, "mmax")
    vals = [1, 2][: max(min(mmax, 2), 1)]
    for k in range(2, mmax):
        vals.append((2 * k + 1) * vals[-1] - k * k * vals[-2])
    return SequenceTable("detG", 1, tuple(Fraction(v) for v in vals))


# ---------------------------------------------------------------------------
# trace sequence y_k and its partial sums q1


def _scaled_y(kmax: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield (k, y_num, q1_num, denom): y_k = y_num/denom, q1_k = q1_num/denom.

    The recurrence (2k-1)^2 y_k = 4(k-1)^2 y_{k-1} + 2 never cancels against
    the odd denominator, so the running denominator is ((2k-1)!!)^2.
    """
    y_num, q1_num, denom = 2, 2, 1
    yield 1, y_num, q1_num, denom
    for k in range(2, kmax + 1):
        sq = (2 * k - 1) ** 2
        y_num = 4 * (k - 1) ** 2 * y_num + 2 * denom
        q1_num = q1_num * sq + y_num
        denom *= sq
        yield k, y_num, q1_num, denom


def y_seq(kmax: int) -> SequenceTable:
    """Table of y_k = trace contribution of the k-th inverse diagonal entry:
    y_1 = 2 and (2k-1)^2 y_k = 4(k-1)^2 y_{k-1} + 2."""
    _require_index(kmax, 1, "kmax")
    vals = tuple(Fraction(yn, d) for _, yn, _, d in _scaled_y(kmax))
    return SequenceTable("y", 1, vals)


def q1(m: int) -> Fraction:
    """Partial sum q1(m) = y_1 + ... + y_m (the trace of the inverse of the
    size-m shifted odd block); q1(0) = 0."""
    _require_index(m, 0, "m")
    if m == 0:
        return Fraction(0)
    for k, _, qn, d in _scaled_y(m):
        pass
    return Fraction(qn, d)


def q1_seq(mmax: int) -> SequenceTable:
    _require_index(mmax, 0, "mmax")
    vals = [Fraction(0)]
    vals.extend(Fraction(qn, d) for _, _, qn, d in _scaled_y(mmax))
    return SequenceTable("q1", 0, tuple(vals[: mmax + 1]))


# ---------------------------------------------------------------------------
# first-minor sequence delta_k and the ratio sequence u_k


def delta_seq(kmax: int) -> SequenceTable:
    """Determinants of the shifted odd block with row and column 1 removed.

    Seeds 13/2 and 389/4; for k >= 3,
    delta_k = (4(k+1)^2 - 6(k+1) + 5/2) delta_{k-1} - k^2 (2k-1)^2 delta_{k-2}.
    """
    _require_index(kmax, 1, "kmax")
    vals = [Fraction(13, 2), Fraction(389, 4)][: max(min(kmax, 2), 1)]
    for j in range(3, kmax + 1):
        vals.append(
            Fraction(8 * j * j + 4 * j + 1, 2) * vals[-1]
            - (j * j * (2 * j - 1) ** 2) * vals[-2]
        )
    return SequenceTable("delta", 1, tuple(vals))


def _scaled_u(kmax: int) -> Iterator[tuple[int, int, int]]:
    """Yield (k, num, denom) with u_k = num/denom over denom = ((2k+1)!!)^2.

    u_0 = 2 and u_k = u_{k-1} + 2 ((2k)!! / (2k+1)!!)^2.
    """
    num, denom = 2, 1
    even_df = 1  # (2k)!!
    yield 0, num, denom
    for k in range(1, kmax + 1):
        even_df *= 2 * k
        sq = (2 * k + 1) ** 2
        num = num * sq + 2 * even_df * even_df
        denom *= sq
        yield k, num, denom


def u_seq(kmax: int) -> SequenceTable:
    """Table of u_k = delta_k / det_{k+1}, computed by the summation form
    u_k = 2 * sum_{j=0..k} ((2j)!!/(2j+1)!!)^2; starts at u_0 = 2."""
    _require_index(kmax, 0, "kmax")
    vals = tuple(Fraction(n, d) for _, n, d in _scaled_u(kmax))
    return SequenceTable("u", 0, vals)


# ---------------------------------------------------------------------------
# characteristic polynomial of the shifted odd block (normalized at 0)


@dataclass(frozen=True)
class QPolynomial:
    """Normalized characteristic polynomial Q_m with Q_m(0) = 1.

    ``coeffs[j]`` stores the magnitude q_j of the degree-j coefficient; the
    polynomial itself is Q_m(x) = sum_j (-1)^j q_j x^j, and q_1 equals the
    trace of the inverse (the q1 partial sum).
    """

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        if self.coeffs[0] != 1:
            raise ValueError("constant coefficient must be 1")

    def evaluate(self, x) -> Fraction:
        """Exact evaluation; ``x`` may be a Fraction, int, or float (floats
        are converted exactly, so the only rounding is the caller's)."""
        x = Fraction(x)
        acc = Fraction(0)
        for j in range(self.degree, -1, -1):
            signed = self.coeffs[j] if j % 2 == 0 else -self.coeffs[j]
            acc = acc * x + signed
        return acc

    @property
    def trace_of_inverse(self) -> Fraction:
        return self.coeffs[1] if self.degree >= 1 else Fraction(0)


def q_polynomial(m: int, *, max_degree: int = MAX_POLY_DEGREE) -> QPolynomial:
    """Characteristic polynomial of the size-m shifted odd block, normalized
    so that Q_m(0) = 1, via
    (2m-1)^2 Q_m = (8m^2 - 12m + 5 - 2x) Q_{m-1} - 4(m-1)^2 Q_{m-2},
    with Q_0 = 1 and Q_1 = 1 - 2x.  Degrees beyond ``max_degree`` are
    rejected; raise the cap explicitly for larger experiments."""
    _require_index(m, 0, "m")
    if m > max_degree:
        raise ValueError(f"degree {m} exceeds the configured cap {max_degree}")
    prev = [Fraction(1)]
    if m == 0:
        return QPolynomial(0, (Fraction(1),))
    cur = [Fraction(1), Fraction(-2)]
    for j in range(2, m + 1):
        inv = Fraction(1, (2 * j - 1) ** 2)
        a = 8 * j * j - 12 * j + 5
        b = 4 * (j - 1) ** 2
        nxt = []
        for i in range(j + 1):
            val = a * cur[i] if i < j else Fraction(0)
            if i >= 1:
                val -= 2 * cur[i - 1]
            if i <= j - 2:
                val -= b * prev[i]
            nxt.append(val * inv)
        prev, cur = cur, nxt
    coeffs = tuple(c if j % 2 == 0 else -c for j, c in enumerate(cur))
    return QPolynomial(m, coeffs)


# ---------------------------------------------------------------------------
# logarithmic bound checks


@dataclass(frozen=True)
class BoundReport:
    """Outcome of an index-by-index inequality scan."""

    name: str
    max_index: int
    first_violation: int | None
    min_margin: float

    @property
    def passed(self) -> bool:
        return self.first_violation is None

    def describe(self) -> str:
        if self.passed:
            return (
                f"{self.name}: indices up to {self.max_index} hold, "
                f"min margin {self.min_margin:.3e}"
            )
        return f"{self.name}: first violation at index {self.first_violation}"


def check_y_bounds(kmax: int) -> BoundReport:
    """Verify ln(k)/(2k) < y_k <= (ln(k) + 4)/(2k) and the stronger lower
    bound y_k > ln(k)/(2k - 1) for every 1 <= k <= kmax.

    The upper bound is attained exactly at k = 1 (both sides equal 2); that
    index is compared in exact arithmetic, all others must clear MARGIN.
    """
    _require_index(kmax, 1, "kmax")
    first_violation = None
    min_margin = math.inf
    for k, yn, _, d in _scaled_y(kmax):
        if k == 1:
            if yn != 2 * d:  # y_1 = 2 = (ln 1 + 4)/2 exactly
                first_violation = 1
                break
            continue
        y = yn / d  # correctly rounded big-integer division
        lk = math.log(k)
        margin = min(
            y - lk / (2 * k),
            y - lk / (2 * k - 1),
            (lk + 4) / (2 * k) - y,
        )
        min_margin = min(min_margin, margin)
        if margin <= MARGIN:
            first_violation = k
            break
    return BoundReport("y-log-sandwich", kmax, first_violation, min_margin)


def check_q1_bound(mmax: int) -> BoundReport:
    """Verify q1(m) <= (ln^2 m + 8 ln m + 8)/4 for every 1 <= m <= mmax.

    Equality holds at m = 1 (both sides are 2); checked exactly there.
    """
    _require_index(mmax, 1, "mmax")
    first_violation = None
    min_margin = math.inf
    for m, _, qn, d in _scaled_y(mmax):
        if m == 1:
            if qn != 2 * d:
                first_violation = 1
                break
            continue
        q = qn / d
        lm = math.log(m)
        margin = (lm * lm + 8 * lm + 8) / 4 - q
        min_margin = min(min_margin, margin)
        if margin <= MARGIN:
            first_violation = m
            break
    return BoundReport("q1-log-bound", mmax, first_violation, min_margin)


def check_u_lower_bound(mmax: int) -> BoundReport:
    """Verify u_{m-1} > ln(m + 1/2) for every 1 <= m <= mmax."""
    _require_index(mmax, 1, "mmax")
    first_violation = None
    min_margin = math.inf
    for k, num, d in _scaled_u(mmax - 1):
        m = k + 1
        margin = num / d - math.log(m + 0.5)
        min_margin = min(min_margin, margin)
        if margin <= MARGIN:
            first_violation = m
            break
    return BoundReport("u-log-lower-bound", mmax, first_violation, min_margin)
