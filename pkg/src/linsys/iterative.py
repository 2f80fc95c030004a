"""Iterative solvers: Gauss-Seidel and a Jacobi baseline.

Gauss-Seidel (successive displacement) feeds each freshly updated component
straight into the remaining updates of the same sweep; Jacobi (simultaneous
displacement) updates every component from the previous iterate.  Both
require a nonzero diagonal; neither reorders rows to repair one — use
:func:`check_diagonal` / :func:`classify_dominance` to diagnose the input
instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    LengthMismatchError,
    NonFiniteIterateError,
    NotSquareError,
    ZeroDiagonalError,
)
from .matrix import DEFAULT_PIVOT_TOLERANCE, as_matrix, as_vector
from .system import (
    DEFAULT_CONFIG,
    LinearSystem,
    Method,
    Solution,
    SolveStatus,
    SolverConfig,
)


class Dominance(str, Enum):
    """Row-wise diagonal dominance classification."""

    STRICT = "strictly-dominant"
    WEAK = "weakly-dominant"
    NONE = "not-dominant"


@dataclass(frozen=True)
class DominanceReport:
    classification: Dominance
    zero_diagonal_indices: tuple[int, ...]


@dataclass(frozen=True)
class SweepRecord:
    """State after one sweep: the iterate, per-component deltas (absolute
    or relative, matching the configured criterion) and their maximum."""

    iteration: int
    x: np.ndarray
    deltas: np.ndarray
    max_delta: float


@dataclass(frozen=True)
class IterationTrace:
    """Complete sweep-by-sweep history of an iterative solve.

    A sweep that overflows to non-finite values terminates the run with
    status ``DIVERGED``; only the finite sweeps are kept, so
    ``iterations_used == len(records)`` always holds.
    """

    records: tuple[SweepRecord, ...]
    final_status: SolveStatus
    iterations_used: int


def _square(a) -> np.ndarray:
    arr = as_matrix(a)
    if arr.shape[0] != arr.shape[1]:
        raise NotSquareError(f"expected a square matrix, got {arr.shape[0]}x{arr.shape[1]}")
    return arr


def check_diagonal(a, pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE) -> list[int]:
    """Indices of rows whose diagonal entry is (numerically) zero.

    An empty list means the Gauss-Seidel/Jacobi update is well-defined.
    """
    arr = _square(a)
    diag = np.abs(np.diagonal(arr))
    return [int(i) for i in np.nonzero(diag <= pivot_tolerance)[0]]


def classify_dominance(a, pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE) -> DominanceReport:
    """Classify row-wise diagonal dominance of a square matrix.

    Strict dominance (|a_ii| greater than the sum of the other magnitudes
    in every row) guarantees both iterations converge.
    """
    arr = _square(a)
    diag = np.abs(np.diagonal(arr))
    off = np.sum(np.abs(arr), axis=1) - diag
    if np.all(diag > off):
        classification = Dominance.STRICT
    elif np.all(diag >= off):
        classification = Dominance.WEAK
    else:
        classification = Dominance.NONE
    return DominanceReport(
        classification=classification,
        zero_diagonal_indices=tuple(check_diagonal(arr, pivot_tolerance)),
    )


def _require_iterable_system(
    a: np.ndarray, b: np.ndarray, x: np.ndarray, pivot_tolerance: float
) -> None:
    n = a.shape[0]
    if b.shape[0] != n or x.shape[0] != n:
        raise LengthMismatchError(
            f"matrix is {n}x{n} but b has {b.shape[0]} and x has {x.shape[0]} entries"
        )
    zeros = check_diagonal(a, pivot_tolerance)
    if zeros:
        raise ZeroDiagonalError(
            f"zero diagonal entries at rows {zeros}; no solutions without pivoting"
        )


def _gauss_seidel_step(a: np.ndarray, b: np.ndarray, x: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    new = x.copy()
    for i in range(n):
        s = a[i] @ new - a[i, i] * new[i]
        new[i] = (b[i] - s) / a[i, i]
    return new


def _jacobi_step(a: np.ndarray, b: np.ndarray, x: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    new = np.empty_like(x)
    for i in range(n):
        s = a[i] @ x - a[i, i] * x[i]
        new[i] = (b[i] - s) / a[i, i]
    return new


_STEPPERS = {
    Method.GAUSS_SEIDEL: _gauss_seidel_step,
    Method.JACOBI: _jacobi_step,
}


def _public_sweep(step, a, b, x, pivot_tolerance: float):
    arr = _square(a)
    rhs = as_vector(b)
    cur = as_vector(x)
    _require_iterable_system(arr, rhs, cur, pivot_tolerance)
    new = step(arr, rhs, cur)
    if not np.all(np.isfinite(new)):
        raise NonFiniteIterateError("sweep overflowed to a non-finite iterate")
    return new, np.abs(new - cur)


def gauss_seidel_sweep(a, b, x, pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE):
    """One Gauss-Seidel sweep from iterate ``x``.

    Updates the unknowns in order, each one from ``(b_i - s) / a_ii`` where
    ``s`` sums the off-diagonal terms using already-updated components.
    Returns ``(x_new, deltas)`` with ``deltas`` the absolute per-component
    changes; the input ``x`` is unmodified.
    """
    return _public_sweep(_gauss_seidel_step, a, b, x, pivot_tolerance)


def jacobi_sweep(a, b, x, pivot_tolerance: float = DEFAULT_PIVOT_TOLERANCE):
    """One Jacobi sweep: same update formula as Gauss-Seidel, but all
    off-diagonal terms use the previous iterate."""
    return _public_sweep(_jacobi_step, a, b, x, pivot_tolerance)


def solve_iterative(
    system: LinearSystem,
    method: Method | str = Method.GAUSS_SEIDEL,
    guess=None,
    config: SolverConfig | None = None,
) -> tuple[Solution, IterationTrace]:
    """Iterate sweeps until the convergence measure drops below epsilon.

    After each sweep the measure is the largest per-component delta
    (absolute, or relative to the new iterate, per ``config.criterion``);
    the solve stops ``CONVERGED`` when the measure is below epsilon for all
    unknowns, ``DIVERGED`` when it exceeds ``config.divergence_threshold``
    or the iterate overflows, and ``MAX_ITERATIONS`` when the sweep budget
    runs out.  ``guess`` defaults to the zero vector.
    """
    cfg = config or DEFAULT_CONFIG
    method = Method(method)
    if method not in _STEPPERS:
        raise ValueError(f"{method.value} is not an iterative method")
    step = _STEPPERS[method]

    a = _square(system.a)
    b = as_vector(system.b)
    x = np.zeros(a.shape[0]) if guess is None else as_vector(guess)
    _require_iterable_system(a, b, x, cfg.pivot_tolerance)

    records: list[SweepRecord] = []
    status = SolveStatus.MAX_ITERATIONS
    for iteration in range(1, cfg.max_iterations + 1):
        new = step(a, b, x)
        if not np.all(np.isfinite(new)):
            status = SolveStatus.DIVERGED
            break
        deltas = np.abs(new - x)
        if cfg.criterion == "rel":
            deltas = deltas / np.maximum(np.abs(new), 1e-30)
        measure = float(np.max(deltas))
        deltas.setflags(write=False)
        new.setflags(write=False)
        records.append(SweepRecord(iteration, new, deltas, measure))
        x = new
        if measure < cfg.epsilon:
            status = SolveStatus.CONVERGED
            break
        if measure > cfg.divergence_threshold:
            status = SolveStatus.DIVERGED
            break

    trace = IterationTrace(tuple(records), status, len(records))
    if status is SolveStatus.CONVERGED:
        solution = Solution(x.copy(), method, status)
    else:
        solution = Solution(None, method, status)
    return solution, trace
