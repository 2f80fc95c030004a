"""Linear systems, solver configuration and solution records."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import LengthMismatchError
from .matrix import as_matrix, as_vector


class Method(str, Enum):
    """Solving method tags, also used as CLI method names."""

    CRAMER = "cramer"
    GAUSS_JORDAN = "gauss-jordan"
    GAUSS_SEIDEL = "gauss-seidel"
    JACOBI = "jacobi"


class SolveStatus(str, Enum):
    """Termination status of a solve."""

    EXACT = "exact"
    CONVERGED = "converged"
    DIVERGED = "diverged"
    MAX_ITERATIONS = "max-iterations"
    SINGULAR = "singular"
    INCONSISTENT = "inconsistent"
    UNDERDETERMINED = "underdetermined"


#: Statuses for which a solution vector exists.
SUCCESS_STATUSES = frozenset({SolveStatus.EXACT, SolveStatus.CONVERGED})


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and iteration limits shared by all solvers.

    ``epsilon`` is the iterative convergence tolerance; ``criterion``
    selects how the per-sweep measure is computed: ``"abs"`` compares the
    largest absolute component change against epsilon, ``"rel"`` divides
    each change by ``max(|x_i|, 1e-30)`` first.
    """

    epsilon: float = 0.01
    max_iterations: int = 1000
    criterion: str = "abs"
    divergence_threshold: float = 1e12
    pivot_tolerance: float = 1e-12
    singular_tolerance: float = 1e-12

    def __post_init__(self):
        if not (math.isfinite(self.epsilon) and self.epsilon > 0):
            raise ValueError("epsilon must be a positive finite number")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.criterion not in ("abs", "rel"):
            raise ValueError(f"criterion must be 'abs' or 'rel', got {self.criterion!r}")
        if not self.divergence_threshold > self.epsilon:
            raise ValueError("divergence_threshold must exceed epsilon")
        if not self.pivot_tolerance > 0:
            raise ValueError("pivot_tolerance must be positive")
        if not self.singular_tolerance > 0:
            raise ValueError("singular_tolerance must be positive")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class LinearSystem:
    """A coefficient matrix ``a`` paired with a right-hand side ``b``.

    Both arrays are validated, copied and frozen on construction, so a
    system can be shared freely between solvers and threads.
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.a)
        b = as_vector(self.b)
        if b.shape[0] != a.shape[0]:
            raise LengthMismatchError(
                f"b has {b.shape[0]} entries but the matrix has {a.shape[0]} rows"
            )
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def equation_count(self) -> int:
        return self.a.shape[0]

    @property
    def unknown_count(self) -> int:
        return self.a.shape[1]

    @property
    def is_square(self) -> bool:
        return self.a.shape[0] == self.a.shape[1]


@dataclass(frozen=True)
class Solution:
    """Result of a solve: the vector ``x`` (when one was produced), the
    method that ran and how it terminated."""

    x: np.ndarray | None
    method: Method
    status: SolveStatus

    def __post_init__(self):
        if self.status in SUCCESS_STATUSES:
            if self.x is None:
                raise ValueError(f"status {self.status.value} requires a solution vector")
            x = as_vector(self.x)
            x.setflags(write=False)
            object.__setattr__(self, "x", x)
        elif self.x is not None:
            raise ValueError(f"status {self.status.value} must not carry a solution vector")

    @property
    def ok(self) -> bool:
        return self.status in SUCCESS_STATUSES
