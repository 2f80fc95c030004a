"""Dense linear-system solvers with convergence diagnostics.

Direct methods (Cramer's rule, Gauss-Jordan elimination) and iterative
methods (Gauss-Seidel, Jacobi) over row-major float64 matrices, plus the
comma/semicolon matrix text format and a benchmarking CLI (``linsys``).
"""

from .direct import RrefResult, reduced_row_echelon, solve_cramer, solve_gauss_jordan
from .errors import (
    BadNumberError,
    EmptyInputError,
    IndexOutOfRangeError,
    LengthMismatchError,
    LinsysError,
    NonFiniteEntryError,
    NonFiniteIterateError,
    NotSquareError,
    ParseError,
    RaggedRowsError,
    ZeroDiagonalError,
    ZeroScaleFactorError,
)
from .iterative import (
    Dominance,
    DominanceReport,
    IterationTrace,
    SweepRecord,
    check_diagonal,
    classify_dominance,
    gauss_seidel_sweep,
    jacobi_sweep,
    solve_iterative,
)
from .matrix import (
    DEFAULT_PIVOT_TOLERANCE,
    AddScaled,
    RowOp,
    Scale,
    Swap,
    apply_row_op,
    augment,
    as_matrix,
    as_vector,
    determinant,
    flush_small,
    format_matrix,
    format_scalar,
    parse_matrix,
    replace_column,
    replay_row_ops,
)
from .system import (
    DEFAULT_CONFIG,
    LinearSystem,
    Method,
    Solution,
    SolveStatus,
    SolverConfig,
)

__version__ = "0.1.0"

__all__ = [
    "AddScaled",
    "BadNumberError",
    "DEFAULT_CONFIG",
    "DEFAULT_PIVOT_TOLERANCE",
    "Dominance",
    "DominanceReport",
    "EmptyInputError",
    "IndexOutOfRangeError",
    "IterationTrace",
    "LengthMismatchError",
    "LinearSystem",
    "LinsysError",
    "Method",
    "NonFiniteEntryError",
    "NonFiniteIterateError",
    "NotSquareError",
    "ParseError",
    "RaggedRowsError",
    "RowOp",
    "RrefResult",
    "Scale",
    "Solution",
    "SolveStatus",
    "SolverConfig",
    "Swap",
    "SweepRecord",
    "ZeroDiagonalError",
    "ZeroScaleFactorError",
    "apply_row_op",
    "as_matrix",
    "as_vector",
    "augment",
    "check_diagonal",
    "classify_dominance",
    "determinant",
    "flush_small",
    "format_matrix",
    "format_scalar",
    "gauss_seidel_sweep",
    "jacobi_sweep",
    "parse_matrix",
    "reduced_row_echelon",
    "replace_column",
    "replay_row_ops",
    "solve_cramer",
    "solve_gauss_jordan",
    "solve_iterative",
]
