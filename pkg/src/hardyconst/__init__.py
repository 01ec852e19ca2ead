"""Best constants of the finite-dimensional Hardy inequalities.

The discrete inequality bounds sums of squared running averages, the
continuous one bounds a weighted integral quotient over exponential-times-
polynomial functions; both best constants increase towards 4 with the
dimension.  This package computes them exactly enough to check every known
bound: integer tridiagonal matrix families, arbitrary-precision rational
recurrences, a certified Sturm-count bisection eigensolver, and assembly of
the constants with their theorem envelopes.
"""

from .eigensolve import (
    EigenResult,
    EigenSolveError,
    Eigenvector,
    SplitEigenResult,
    inverse_iteration,
    qpoly_residual,
    smallest_eigenvalue,
    smallest_eigenvalue_A,
    sturm_count,
    warmup,
)
from .exact import (
    BoundReport,
    QPolynomial,
    SequenceTable,
    check_q1_bound,
    check_u_lower_bound,
    check_y_bounds,
    delta_seq,
    det_D,
    det_D_closed,
    det_D_seq,
    det_G,
    det_G_seq,
    double_factorial,
    q1,
    q1_seq,
    q_polynomial,
    u_seq,
    y_seq,
)
from .hardy import (
    CoefficientVector,
    HardyRecord,
    SequenceSample,
    continuous_constant,
    discrete_constant,
    discrete_quotient,
    extremal_reconstruction,
    harmonic_lower_bound,
    laguerre_eval,
    quadratic_forms,
    quadrature_oracle,
    sqrt_test_sequence,
    theorem_bounds_continuous,
    theorem_bounds_discrete,
)
from .matrices import (
    BidiagonalMatrix,
    PentadiagonalMatrix,
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
from .verify import CheckResult, VerifyScale, run_verification

__version__ = "0.1.0"

__all__ = [
    "BidiagonalMatrix",
    "BoundReport",
    "CheckResult",
    "CoefficientVector",
    "EigenResult",
    "EigenSolveError",
    "Eigenvector",
    "HardyRecord",
    "PentadiagonalMatrix",
    "QPolynomial",
    "SequenceSample",
    "SequenceTable",
    "SplitEigenResult",
    "TridiagonalMatrix",
    "VerifyScale",
    "build_A",
    "build_B",
    "build_C",
    "build_D",
    "build_F",
    "build_G",
    "build_H",
    "build_U",
    "check_q1_bound",
    "check_u_lower_bound",
    "check_y_bounds",
    "continuous_constant",
    "delta_seq",
    "det_D",
    "det_D_closed",
    "det_D_seq",
    "det_G",
    "det_G_seq",
    "discrete_constant",
    "discrete_quotient",
    "double_factorial",
    "extremal_reconstruction",
    "harmonic_lower_bound",
    "inverse_iteration",
    "laguerre_eval",
    "q1",
    "q1_seq",
    "q_polynomial",
    "qpoly_residual",
    "quadratic_forms",
    "quadrature_oracle",
    "run_verification",
    "smallest_eigenvalue",
    "smallest_eigenvalue_A",
    "split_A",
    "sqrt_test_sequence",
    "sturm_count",
    "theorem_bounds_continuous",
    "theorem_bounds_discrete",
    "u_seq",
    "warmup",
    "y_seq",
    "__version__",
]
