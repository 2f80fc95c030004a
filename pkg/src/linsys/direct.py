"""Direct solvers: Cramer's rule and Gauss-Jordan elimination.

Both produce exact (up to rounding) solutions in a fixed number of
arithmetic steps.  Gauss-Jordan works on the augmented matrix and also
handles non-square, inconsistent and underdetermined systems; Cramer
requires a square nonsingular matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteEntryError, NotSquareError
from .matrix import (
    AddScaled,
    RowOp,
    Scale,
    Swap,
    _flush_rows,
    _fold_op,
    as_matrix,
    augment,
    determinant,
    replace_column,
)
from .system import DEFAULT_CONFIG, LinearSystem, Method, Solution, SolveStatus, SolverConfig


@dataclass(frozen=True)
class RrefResult:
    """Reduced row-echelon form of an augmented matrix.

    ``ops`` is the ordered log of elementary row operations performed;
    replaying it with :func:`linsys.matrix.replay_row_ops` (same pivot
    tolerance) reproduces ``rref`` bit-for-bit.  ``rank_a`` counts pivots
    in the coefficient part, ``rank_augmented`` in the whole matrix.
    """

    rref: np.ndarray
    ops: tuple[RowOp, ...]
    pivot_columns: tuple[int, ...]
    rank_a: int
    rank_augmented: int


def _unit_scale_factors(pivot: float) -> list[float]:
    """Scale factors that turn ``pivot`` into exactly 1.0 by multiplication.

    ``pivot * (1/pivot)`` rounds to 1.0 for most pivots but can land one ulp
    off; searching the reciprocal's neighbours, chaining a second scale when
    needed, always reaches exactly 1.0 in at most a few steps.
    """
    factors: list[float] = []
    value = pivot
    for _ in range(4):
        if value == 1.0:
            return factors
        candidate = 1.0 / value
        if not math.isfinite(candidate):
            raise NonFiniteEntryError(
                f"pivot {value!r} is too small to normalize; raise pivot_tolerance"
            )
        for f in (
            candidate,
            math.nextafter(candidate, math.inf),
            math.nextafter(candidate, -math.inf),
        ):
            if value * f == 1.0:
                factors.append(f)
                return factors
        factors.append(candidate)
        value = value * candidate
    return factors


def reduced_row_echelon(aug, config: SolverConfig | None = None) -> RrefResult:
    """Reduce an augmented matrix to its unique reduced row-echelon form.

    Pivoting picks the largest-magnitude candidate in each column (lowest
    row index on ties) and swaps it up.  Pivot rows are rescaled so the
    leading entry is exactly 1.0, then every other row's entry in that
    column is eliminated.  After each operation, entries with magnitude at
    or below ``config.pivot_tolerance`` are flushed to exact zero, so the
    structural properties of the result (unit pivots, zero columns, zero
    rows at the bottom) hold bit-exactly.
    """
    cfg = config or DEFAULT_CONFIG
    tol = cfg.pivot_tolerance
    arr = as_matrix(aug)
    rows, cols = arr.shape
    ops: list[RowOp] = []
    _flush_rows(arr, tol)

    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        candidate = pivot_row + int(np.argmax(np.abs(arr[pivot_row:, col])))
        if arr[candidate, col] == 0.0:
            continue
        if candidate != pivot_row:
            op = Swap(pivot_row, candidate)
            _fold_op(arr, op, tol)
            ops.append(op)
        for factor in _unit_scale_factors(arr[pivot_row, col]):
            op = Scale(pivot_row, factor)
            _fold_op(arr, op, tol)
            ops.append(op)
        pivot = arr[pivot_row, col]
        for r in range(rows):
            entry = arr[r, col]
            if r == pivot_row or entry == 0.0:
                continue
            op = AddScaled(r, pivot_row, -entry / pivot)
            _fold_op(arr, op, tol)
            ops.append(op)
        pivot_cols.append(col)
        pivot_row += 1

    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("elimination overflowed to a non-finite value")
    rank_a = sum(1 for c in pivot_cols if c < cols - 1)
    return RrefResult(
        rref=arr,
        ops=tuple(ops),
        pivot_columns=tuple(pivot_cols),
        rank_a=rank_a,
        rank_augmented=len(pivot_cols),
    )


def solve_gauss_jordan(system: LinearSystem, config: SolverConfig | None = None) -> Solution:
    """Solve by full Gauss-Jordan reduction of the augmented matrix.

    Non-square systems are accepted; the rank pattern of the reduced form
    decides the status: more pivots in the augmented matrix than in the
    coefficient part means the equations contradict each other
    (``INCONSISTENT``); coefficient rank below the number of unknowns means
    no unique solution (``UNDERDETERMINED``); otherwise the solution is
    read off the last column (``EXACT``).
    """
    result = reduced_row_echelon(augment(system.a, system.b), config)
    n = system.unknown_count
    if result.rank_augmented > result.rank_a:
        return Solution(None, Method.GAUSS_JORDAN, SolveStatus.INCONSISTENT)
    if result.rank_a < n:
        return Solution(None, Method.GAUSS_JORDAN, SolveStatus.UNDERDETERMINED)
    return Solution(result.rref[:n, -1].copy(), Method.GAUSS_JORDAN, SolveStatus.EXACT)


def solve_cramer(system: LinearSystem, config: SolverConfig | None = None) -> Solution:
    """Solve a square system by Cramer's rule.

    Computes the determinant of the coefficient matrix, then for each
    unknown the determinant of the matrix with that column replaced by the
    right-hand side; each quotient is one solution component.  A
    determinant of magnitude at or below ``config.singular_tolerance``
    yields status ``SINGULAR`` (no unique solution, or numerically
    degenerate).
    """
    cfg = config or DEFAULT_CONFIG
    if not system.is_square:
        raise NotSquareError(
            f"Cramer's rule needs a square system, got "
            f"{system.equation_count}x{system.unknown_count}"
        )
    det_a = determinant(system.a, cfg.pivot_tolerance)
    if abs(det_a) <= cfg.singular_tolerance:
        return Solution(None, Method.CRAMER, SolveStatus.SINGULAR)
    n = system.unknown_count
    x = np.empty(n)
    for i in range(n):
        transformed = replace_column(system.a, i, system.b)
        x[i] = determinant(transformed, cfg.pivot_tolerance) / det_a
    return Solution(x, Method.CRAMER, SolveStatus.EXACT)
