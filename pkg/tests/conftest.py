import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from linsys import LinearSystem

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

# 3x3 example system with solution (1, 2, 3); not diagonally dominant and
# Gauss-Seidel diverges on it from the zero guess.
PAPER_A = [[2.0, 3.0, -1.0], [4.0, 4.0, -3.0], [-2.0, 3.0, -1.0]]
PAPER_B = [5.0, 3.0, 1.0]

# Strictly diagonally dominant system with exact solution (1, 1, 1).
DOMINANT_A = [[4.0, 1.0, 1.0], [1.0, 5.0, 2.0], [0.0, 1.0, 3.0]]
DOMINANT_B = [6.0, 8.0, 4.0]


@pytest.fixture
def paper_system() -> LinearSystem:
    return LinearSystem(PAPER_A, PAPER_B)


@pytest.fixture
def dominant_system() -> LinearSystem:
    return LinearSystem(DOMINANT_A, DOMINANT_B)


def random_ranked_matrix(rng: np.random.Generator, rows: int, cols: int, rank: int) -> np.ndarray:
    """Random matrix with the requested rank (at most min(rows, cols))."""
    left = rng.uniform(-3.0, 3.0, size=(rows, rank))
    right = rng.uniform(-3.0, 3.0, size=(rank, cols))
    return left @ right if rank else np.zeros((rows, cols))
