"""Dense real matrices: text format, determinants, elementary row operations.

Matrices are plain 2-D ``numpy.ndarray`` objects of ``float64`` in row-major
order; vectors are 1-D arrays.  Every function validates its input, works on
a private copy and returns fresh arrays, so callers' values are never
modified and everything here is safe to use concurrently.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import (
    BadNumberError,
    EmptyInputError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NonFiniteEntryError,
    NotSquareError,
    RaggedRowsError,
    ZeroScaleFactorError,
)

#: Absolute magnitude at or below which a pivot is treated as zero.
DEFAULT_PIVOT_TOLERANCE = 1e-12

# optional sign, mandatory digits, optional fraction, optional exponent
_NUMBER_RE = re.compile(r"[+-]?[0-9]+(\.[0-9]+)?([eE][+-]?[0-9]+)?\Z")


def as_matrix(data) -> np.ndarray:
    """Validate and copy ``data`` into a 2-D float64 array.

    Raises ``ValueError`` for anything that is not a non-empty rectangular
    2-D layout and ``NonFiniteEntryError`` if any entry is NaN or infinite.
    """
    try:
        arr = np.array(data, dtype=float, order="C")
    except (ValueError, TypeError) as exc:
        raise ValueError(f"not a rectangular numeric matrix: {exc}") from None
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got {arr.ndim}-D data")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("matrix must have at least one row and one column")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("matrix entries must be finite")
    return arr


def as_vector(data) -> np.ndarray:
    """Validate and copy ``data`` into a 1-D float64 array."""
    try:
        arr = np.array(data, dtype=float)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"not a numeric vector: {exc}") from None
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got {arr.ndim}-D data")
    if arr.shape[0] < 1:
        raise ValueError("vector must have at least one entry")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("vector entries must be finite")
    return arr


def parse_matrix(text: str) -> np.ndarray:
    """Parse the matrix text format: commas between entries, semicolons
    between rows, e.g. ``"2, 3, -1 ; 4, 4, -3 ; -2, 3, -1"``.

    Whitespace (including newlines) around entries and separators is
    ignored.  Numbers are plain decimals with optional sign, fraction and
    exponent.
    """
    if text.strip() == "":
        raise EmptyInputError("no matrix entries in input")
    rows: list[list[float]] = []
    width = -1
    for i, row_text in enumerate(text.split(";")):
        row: list[float] = []
        for j, token in enumerate(row_text.split(",")):
            token = token.strip()
            if _NUMBER_RE.match(token) is None:
                raise BadNumberError(token, i, j)
            value = float(token)
            if math.isinf(value):
                raise NonFiniteEntryError(
                    f"{token!r} at row {i + 1}, column {j + 1} overflows a double"
                )
            row.append(value)
        if width < 0:
            width = len(row)
        elif len(row) != width:
            raise RaggedRowsError(i, len(row), width)
        rows.append(row)
    return np.array(rows, dtype=float)


def format_scalar(value: float) -> str:
    """Shortest decimal string that parses back to the identical double.

    Integral values drop the trailing ``.0`` (``1.0`` -> ``"1"``), matching
    the matrix text grammar.
    """
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteEntryError("cannot format a non-finite value")
    text = repr(value)
    if text.endswith(".0"):
        text = text[:-2]
    return text


def format_matrix(matrix) -> str:
    """Inverse of :func:`parse_matrix`; round-trips bit-exactly."""
    arr = as_matrix(matrix)
    return ";".join(",".join(format_scalar(v) for v in row) for row in arr)


# ---------------------------------------------------------------------------
# Elementary row operations


@dataclass(frozen=True)
class Swap:
    """Interchange rows ``i`` and ``j``."""

    i: int
    j: int


@dataclass(frozen=True)
class Scale:
    """Multiply row ``row`` by ``factor`` (nonzero)."""

    row: int
    factor: float


@dataclass(frozen=True)
class AddScaled:
    """Add ``factor`` times row ``source`` to row ``target``."""

    target: int
    source: int
    factor: float


RowOp = Union[Swap, Scale, AddScaled]


def _check_row(index: int, row_count: int) -> None:
    if not 0 <= index < row_count:
        raise IndexOutOfRangeError(
            f"row index {index} out of range for {row_count} rows"
        )


def _validate_op(op: RowOp, row_count: int) -> None:
    if isinstance(op, Swap):
        _check_row(op.i, row_count)
        _check_row(op.j, row_count)
    elif isinstance(op, Scale):
        _check_row(op.row, row_count)
        if op.factor == 0.0:
            raise ZeroScaleFactorError("cannot scale a row by zero")
        if not math.isfinite(op.factor):
            raise NonFiniteEntryError("scale factor must be finite")
    elif isinstance(op, AddScaled):
        _check_row(op.target, row_count)
        _check_row(op.source, row_count)
        if not math.isfinite(op.factor):
            raise NonFiniteEntryError("row-addition factor must be finite")
    else:
        raise TypeError(f"not a row operation: {op!r}")


def _apply_op(arr: np.ndarray, op: RowOp) -> None:
    # In-place primitive shared by apply_row_op, the reduction and replay,
    # so all three produce bit-identical arithmetic.
    if isinstance(op, Swap):
        arr[[op.i, op.j]] = arr[[op.j, op.i]]
    elif isinstance(op, Scale):
        arr[op.row] *= op.factor
    else:
        arr[op.target] += op.factor * arr[op.source]


def _touched_rows(op: RowOp) -> tuple[int, ...]:
    if isinstance(op, Swap):
        return ()
    if isinstance(op, Scale):
        return (op.row,)
    return (op.target,)


def flush_small(matrix, tolerance: float = DEFAULT_PIVOT_TOLERANCE) -> np.ndarray:
    """Copy of ``matrix`` with every entry of magnitude <= ``tolerance``
    replaced by exact +0.0 (this also normalizes -0.0)."""
    arr = as_matrix(matrix)
    _flush_rows(arr, tolerance)
    return arr


def _flush_rows(arr: np.ndarray, tolerance: float, rows: Iterable[int] | None = None) -> None:
    if rows is None:
        arr[np.abs(arr) <= tolerance] = 0.0
    else:
        for r in rows:
            row = arr[r]
            row[np.abs(row) <= tolerance] = 0.0


def _fold_op(arr: np.ndarray, op: RowOp, tolerance: float) -> None:
    # One reduction step: apply the op, then flush the rows it touched.
    # Untouched rows cannot acquire new sub-tolerance entries, so flushing
    # only touched rows is equivalent to flushing the whole matrix.
    _apply_op(arr, op)
    _flush_rows(arr, tolerance, _touched_rows(op))


def apply_row_op(matrix, op: RowOp) -> np.ndarray:
    """Apply one elementary row operation, returning a new matrix.

    The input is left unmodified.  Raises ``IndexOutOfRangeError`` for bad
    row indices and ``ZeroScaleFactorError`` for a zero scale factor.
    """
    arr = as_matrix(matrix)
    _validate_op(op, arr.shape[0])
    _apply_op(arr, op)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError("row operation overflowed to a non-finite value")
    return arr


def replay_row_ops(
    matrix,
    ops: Iterable[RowOp],
    pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE,
) -> np.ndarray:
    """Fold a logged sequence of row operations over ``matrix``.

    Replays under the same rule the row reduction uses: entries with
    magnitude at or below ``pivot_tolerance`` are flushed to exact zero
    after every operation (and once up front).  Replaying the ops log of
    :func:`linsys.direct.reduced_row_echelon` therefore reproduces its
    result bit-for-bit.
    """
    arr = as_matrix(matrix)
    _flush_rows(arr, pivot_tolerance)
    for op in ops:
        _validate_op(op, arr.shape[0])
        _fold_op(arr, op, pivot_tolerance)
    return arr


# ---------------------------------------------------------------------------
# Determinant and column replacement


def determinant(matrix, pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE) -> float:
    """Determinant by LU factorization with partial pivoting.

    Returns the sign-adjusted product of the pivots; returns exactly 0.0 as
    soon as a pivot's magnitude falls at or below ``pivot_tolerance``.
    """
    arr = as_matrix(matrix)
    n, m = arr.shape
    if n != m:
        raise NotSquareError(f"determinant needs a square matrix, got {n}x{m}")
    det = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(arr[k:, k])))
        if abs(arr[p, k]) <= pivot_tolerance:
            return 0.0
        if p != k:
            arr[[k, p]] = arr[[p, k]]
            det = -det
        det *= arr[k, k]
        if not math.isfinite(det):
            raise NonFiniteEntryError("determinant overflowed a double")
        if k + 1 < n:
            factors = arr[k + 1 :, k] / arr[k, k]
            arr[k + 1 :, k:] -= np.outer(factors, arr[k, k:])
    return det


def replace_column(matrix, col: int, column_values) -> np.ndarray:
    """New matrix equal to ``matrix`` with column ``col`` replaced."""
    arr = as_matrix(matrix)
    vec = as_vector(column_values)
    if not 0 <= col < arr.shape[1]:
        raise IndexOutOfRangeError(
            f"column index {col} out of range for {arr.shape[1]} columns"
        )
    if vec.shape[0] != arr.shape[0]:
        raise LengthMismatchError(
            f"replacement column has {vec.shape[0]} entries, matrix has "
            f"{arr.shape[0]} rows"
        )
    arr[:, col] = vec
    return arr


def augment(matrix, rhs) -> np.ndarray:
    """Coefficient matrix with the right-hand side appended as a column."""
    arr = as_matrix(matrix)
    vec = as_vector(rhs)
    if vec.shape[0] != arr.shape[0]:
        raise LengthMismatchError(
            f"right-hand side has {vec.shape[0]} entries, matrix has "
            f"{arr.shape[0]} rows"
        )
    return np.column_stack([arr, vec])
