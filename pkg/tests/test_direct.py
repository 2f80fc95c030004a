import numpy as np
import pytest

from linsys import (
    LinearSystem,
    Method,
    NotSquareError,
    RrefResult,
    SolverConfig,
    SolveStatus,
    Swap,
    augment,
    determinant,
    reduced_row_echelon,
    replace_column,
    replay_row_ops,
    solve_cramer,
    solve_gauss_jordan,
)
from conftest import PAPER_A, PAPER_B, random_ranked_matrix
from oracles import cofactor_determinant


def bitwise_equal(a, b) -> bool:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a.shape == b.shape and a.tobytes() == b.tobytes()


def assert_rref_structure(result: RrefResult) -> None:
    """Check the structural invariants of a reduced row-echelon form."""
    rref = result.rref
    rows, cols = rref.shape
    pivots = list(result.pivot_columns)

    assert pivots == sorted(pivots)
    assert len(set(pivots)) == len(pivots)
    assert result.rank_augmented == len(pivots)
    assert result.rank_a == sum(1 for c in pivots if c < cols - 1)
    assert result.rank_a <= result.rank_augmented <= result.rank_a + 1

    for r, c in enumerate(pivots):
        assert rref[r, c] == 1.0, f"pivot at ({r}, {c}) is {rref[r, c]!r}"
        column = rref[:, c].copy()
        column[r] = 0.0
        assert np.all(column == 0.0), f"pivot column {c} not cleared"
        # leading entry: everything left of the pivot in its row is zero
        assert np.all(rref[r, :c] == 0.0)

    for r in range(len(pivots), rows):
        assert np.all(rref[r] == 0.0), f"row {r} below the pivots is not zero"


# ---------------------------------------------------------------------------
# reduced_row_echelon


def test_rref_paper_system_is_exact():
    result = reduced_row_echelon(augment(PAPER_A, PAPER_B))
    expected = [[1.0, 0.0, 0.0, 1.0], [0.0, 1.0, 0.0, 2.0], [0.0, 0.0, 1.0, 3.0]]
    assert bitwise_equal(result.rref, expected)
    assert (result.rank_a, result.rank_augmented) == (3, 3)
    assert_rref_structure(result)


def test_rref_identity_is_untouched():
    aug = augment(np.eye(3), [7.0, -3.0, 0.5])
    result = reduced_row_echelon(aug)
    assert bitwise_equal(result.rref, aug)
    assert result.ops == ()


def test_rref_pushes_zero_row_down_with_single_swap():
    result = reduced_row_echelon([[0.0, 0.0, 0.0], [1.0, 2.0, 3.0]])
    assert bitwise_equal(result.rref, [[1.0, 2.0, 3.0], [0.0, 0.0, 0.0]])
    assert result.ops == (Swap(0, 1),)


def test_rref_is_idempotent():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m = rng.uniform(-5.0, 5.0, size=(4, 5))
        first = reduced_row_echelon(m)
        second = reduced_row_echelon(first.rref)
        assert bitwise_equal(second.rref, first.rref)
        assert second.ops == ()


def test_rref_replay_reproduces_result_bit_for_bit():
    rng = np.random.default_rng(17)
    for _ in range(30):
        rows = int(rng.integers(1, 7))
        cols = int(rng.integers(2, 8))
        m = rng.uniform(-5.0, 5.0, size=(rows, cols))
        result = reduced_row_echelon(m)
        assert bitwise_equal(replay_row_ops(m, result.ops), result.rref)


def test_rref_structure_on_random_ranks_and_zero_rows():
    rng = np.random.default_rng(23)
    for _ in range(100):
        rows = int(rng.integers(1, 7))
        cols = int(rng.integers(2, 8))
        rank = int(rng.integers(0, min(rows, cols) + 1))
        m = random_ranked_matrix(rng, rows, cols, rank)
        if rng.random() < 0.3:
            m[rng.integers(0, rows)] = 0.0
        if rows > 1 and rng.random() < 0.3:
            m[rng.integers(0, rows)] = m[rng.integers(0, rows)]
        result = reduced_row_echelon(m)
        assert_rref_structure(result)
        assert bitwise_equal(replay_row_ops(m, result.ops), result.rref)


def test_rref_respects_pivot_tolerance():
    cfg = SolverConfig(pivot_tolerance=1e-6)
    result = reduced_row_echelon([[1e-7, 1.0], [0.0, 0.0]], cfg)
    # the sub-tolerance leading entry is flushed, so column 1 holds the pivot
    assert result.pivot_columns == (1,)
    assert bitwise_equal(result.rref, [[0.0, 1.0], [0.0, 0.0]])


def test_rref_leaves_input_unmodified():
    m = augment(PAPER_A, PAPER_B)
    before = m.copy()
    reduced_row_echelon(m)
    assert bitwise_equal(m, before)


# ---------------------------------------------------------------------------
# solve_gauss_jordan


def test_gauss_jordan_paper_system(paper_system):
    solution = solve_gauss_jordan(paper_system)
    assert solution.status is SolveStatus.EXACT
    assert solution.method is Method.GAUSS_JORDAN
    assert np.allclose(solution.x, [1.0, 2.0, 3.0], atol=1e-10, rtol=0.0)


def test_gauss_jordan_inconsistent():
    system = LinearSystem([[1.0, 1.0], [1.0, 1.0]], [1.0, 2.0])
    solution = solve_gauss_jordan(system)
    assert solution.status is SolveStatus.INCONSISTENT
    assert solution.x is None


def test_gauss_jordan_underdetermined():
    system = LinearSystem([[1.0, 1.0]], [1.0])
    solution = solve_gauss_jordan(system)
    assert solution.status is SolveStatus.UNDERDETERMINED
    assert solution.x is None


def test_gauss_jordan_overdetermined_consistent():
    # three equations, two unknowns, consistent: x = (2, -1)
    a = [[1.0, 1.0], [2.0, 0.0], [0.0, 3.0]]
    b = [1.0, 4.0, -3.0]
    solution = solve_gauss_jordan(LinearSystem(a, b))
    assert solution.status is SolveStatus.EXACT
    assert np.allclose(solution.x, [2.0, -1.0], atol=1e-12)


# ---------------------------------------------------------------------------
# solve_cramer


def test_cramer_paper_system(paper_system):
    solution = solve_cramer(paper_system)
    assert solution.status is SolveStatus.EXACT
    assert solution.method is Method.CRAMER
    assert np.allclose(solution.x, [1.0, 2.0, 3.0], atol=1e-10, rtol=0.0)


def test_cramer_identity_system():
    solution = solve_cramer(LinearSystem(np.eye(2), [7.0, -3.0]))
    assert solution.status is SolveStatus.EXACT
    assert bitwise_equal(solution.x, [7.0, -3.0])


def test_cramer_singular_system():
    solution = solve_cramer(LinearSystem([[1.0, 2.0], [2.0, 4.0]], [1.0, 1.0]))
    assert solution.status is SolveStatus.SINGULAR
    assert solution.x is None


def test_cramer_requires_square():
    with pytest.raises(NotSquareError):
        solve_cramer(LinearSystem([[1.0, 2.0]], [1.0]))


# ---------------------------------------------------------------------------
# cross-method properties


def _random_nonsingular_system(rng: np.random.Generator, max_n: int = 8) -> LinearSystem:
    while True:
        n = int(rng.integers(1, max_n + 1))
        a = rng.uniform(-5.0, 5.0, size=(n, n))
        if abs(determinant(a)) >= 0.1:
            return LinearSystem(a, rng.uniform(-5.0, 5.0, size=n))


def test_cramer_and_gauss_jordan_agree():
    rng = np.random.default_rng(29)
    for _ in range(100):
        system = _random_nonsingular_system(rng)
        xc = solve_cramer(system).x
        xg = solve_gauss_jordan(system).x
        scale = max(float(np.max(np.abs(xg))), 1e-30)
        assert float(np.max(np.abs(xc - xg))) <= 1e-8 * scale


def test_cramer_consistency_with_gauss_jordan_solution():
    rng = np.random.default_rng(31)
    for _ in range(25):
        system = _random_nonsingular_system(rng, max_n=6)
        x = solve_gauss_jordan(system).x
        det_a = determinant(system.a)
        for i in range(system.unknown_count):
            det_i = determinant(replace_column(system.a, i, system.b))
            assert abs(det_i - x[i] * det_a) <= 1e-9 * max(abs(det_i), abs(x[i] * det_a), 1e-12)


def test_exact_solutions_have_small_residuals():
    rng = np.random.default_rng(37)
    for _ in range(50):
        system = _random_nonsingular_system(rng)
        for solution in (solve_cramer(system), solve_gauss_jordan(system)):
            assert solution.status is SolveStatus.EXACT
            residual = float(np.max(np.abs(system.a @ solution.x - system.b)))
            a_norm = float(np.max(np.sum(np.abs(system.a), axis=1)))
            x_norm = float(np.max(np.abs(solution.x)))
            assert residual <= 1e-8 * (1.0 + a_norm * x_norm)


def test_cramer_oracle_check_on_paper_determinants():
    # determinants behind the paper solution, against the oracle
    assert cofactor_determinant(PAPER_A) == pytest.approx(20.0, rel=1e-12)
    for i, expected in enumerate([20.0, 40.0, 60.0]):
        transformed = replace_column(PAPER_A, i, PAPER_B)
        assert cofactor_determinant(transformed) == pytest.approx(expected, rel=1e-12)
        assert determinant(transformed) == pytest.approx(expected, rel=1e-9)
