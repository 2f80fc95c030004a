"""Command-line front end: solve, compare and bench subcommands.

System files are UTF-8 text with labeled lines; ``#`` comments and blank
lines are ignored and the labels may appear in any order::

    # 3x3 example
    A: 2,3,-1 ; 4,4,-3 ; -2,3,-1
    b: 5;3;1
    guess: 0;0;0

Exit codes: 0 a solution was produced, 2 the iteration failed to converge,
3 the system has no unique solution, 4 input or usage error.
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path
from typing import Sequence

import numpy as np

from .direct import solve_cramer, solve_gauss_jordan
from .errors import LinsysError, ZeroDiagonalError
from .iterative import IterationTrace, classify_dominance, solve_iterative
from .matrix import format_scalar, parse_matrix
from .system import LinearSystem, Method, Solution, SolveStatus, SolverConfig

_EXIT_CODES = {
    SolveStatus.EXACT: 0,
    SolveStatus.CONVERGED: 0,
    SolveStatus.DIVERGED: 2,
    SolveStatus.MAX_ITERATIONS: 2,
    SolveStatus.SINGULAR: 3,
    SolveStatus.INCONSISTENT: 3,
    SolveStatus.UNDERDETERMINED: 3,
}

_ITERATIVE = (Method.GAUSS_SEIDEL, Method.JACOBI)


class UsageError(Exception):
    """Bad flags, unreadable files or malformed file contents (exit 4)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# System files


def _parse_column(text: str, label: str) -> np.ndarray:
    values = parse_matrix(text)
    if values.shape[1] != 1:
        raise UsageError(f"{label} must be a single semicolon-separated column")
    return values[:, 0]


def load_system_file(path) -> tuple[LinearSystem, np.ndarray | None]:
    """Read a labeled system file; returns the system and the optional guess."""
    text = Path(path).read_text(encoding="utf-8")
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, rest = line.partition(":")
        label = label.strip()
        if not sep or label not in ("A", "b", "guess"):
            raise UsageError(
                f"{path}:{lineno}: expected 'A:', 'b:' or 'guess:' followed by values"
            )
        if label in fields:
            raise UsageError(f"{path}:{lineno}: duplicate {label!r} line")
        fields[label] = rest
    for required in ("A", "b"):
        if required not in fields:
            raise UsageError(f"{path}: missing {required!r} line")
    system = LinearSystem(parse_matrix(fields["A"]), _parse_column(fields["b"], "b"))
    guess = None
    if "guess" in fields:
        guess = _parse_column(fields["guess"], "guess")
        if guess.shape[0] != system.unknown_count:
            raise UsageError(
                f"{path}: guess has {guess.shape[0]} entries, expected "
                f"{system.unknown_count}"
            )
    return system, guess


def _write_trace(path, trace: IterationTrace) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "component", "value", "delta"])
        for record in trace.records:
            for i, (value, delta) in enumerate(zip(record.x, record.deltas)):
                writer.writerow(
                    [record.iteration, i, format_scalar(value), format_scalar(delta)]
                )


# ---------------------------------------------------------------------------
# solve


def _config_from_args(args) -> SolverConfig:
    return SolverConfig(
        epsilon=args.epsilon,
        max_iterations=args.max_iter,
        criterion=args.criterion,
        singular_tolerance=args.singular_tol,
    )


def _solution_lines(solution: Solution) -> list[str]:
    lines = []
    if solution.x is not None:
        lines.extend(
            f"x[{i}] = {format_scalar(v)}" for i, v in enumerate(solution.x)
        )
    lines.append(f"status: {solution.status.value}")
    return lines


def cmd_solve(args) -> int:
    system, file_guess = load_system_file(args.input)
    config = _config_from_args(args)
    method = Method(args.method)
    if method in _ITERATIVE:
        guess = _parse_column(args.guess, "guess") if args.guess else file_guess
        solution, trace = solve_iterative(system, method, guess, config)
        if args.trace:
            _write_trace(args.trace, trace)
        lines = _solution_lines(solution)
        lines.append(f"iterations: {trace.iterations_used}")
    else:
        if args.trace:
            raise UsageError("--trace requires an iterative method")
        if method is Method.CRAMER:
            solution = solve_cramer(system, config)
        else:
            solution = solve_gauss_jordan(system, config)
        lines = _solution_lines(solution)
    print("\n".join(lines))
    return _EXIT_CODES[solution.status]


# ---------------------------------------------------------------------------
# compare


def _format_solution_vector(x: np.ndarray | None) -> str:
    if x is None:
        return "-"
    return ",".join(format_scalar(v) for v in x)


def cmd_compare(args) -> int:
    system, file_guess = load_system_file(args.input)
    config = _config_from_args(args)
    guess = _parse_column(args.guess, "guess") if args.guess else file_guess

    reference = solve_cramer(system, config)
    dominance = classify_dominance(system.a, config.pivot_tolerance)

    rows = [(Method.CRAMER, reference, None)]
    rows.append((Method.GAUSS_JORDAN, solve_gauss_jordan(system, config), None))
    for method in _ITERATIVE:
        try:
            solution, trace = solve_iterative(system, method, guess, config)
            rows.append((method, solution, trace.iterations_used))
        except ZeroDiagonalError:
            rows.append((method, None, None))

    lines = [f"dominance: {dominance.classification.value}"]
    lines.append(f"{'method':<14}{'status':<16}{'deviation':<14}{'iterations':<12}solution")
    for method, solution, iterations in rows:
        if solution is None:
            status = "zero-diagonal"
            deviation = "-"
        else:
            status = solution.status.value
            if solution.x is not None and reference.x is not None:
                deviation = format_scalar(float(np.max(np.abs(solution.x - reference.x))))
            else:
                deviation = "-"
        iters = "-" if iterations is None else str(iterations)
        vector = _format_solution_vector(solution.x if solution else None)
        lines.append(f"{method.value:<14}{status:<16}{deviation:<14}{iters:<12}{vector}")
    print("\n".join(lines))
    return 3 if reference.status is SolveStatus.SINGULAR else 0


# ---------------------------------------------------------------------------
# bench


def random_dominant_system(n: int, rng: np.random.Generator) -> LinearSystem:
    """Random strictly diagonally dominant system of size ``n``."""
    a = rng.uniform(-1.0, 1.0, size=(n, n))
    np.fill_diagonal(a, 0.0)
    np.fill_diagonal(a, np.sum(np.abs(a), axis=1) + 1.0 + rng.uniform(0.0, 1.0, n))
    b = rng.uniform(-5.0, 5.0, size=n)
    return LinearSystem(a, b)


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"--sizes must be a comma-separated list of integers: {text!r}")
    if not sizes or any(n < 1 for n in sizes):
        raise UsageError("--sizes entries must be positive integers")
    return sizes


def _best_of_three(run) -> float:
    return min(_timed(run) for _ in range(3))


def _timed(run) -> float:
    start = time.perf_counter()
    run()
    return time.perf_counter() - start


def cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    rng = np.random.default_rng(args.seed)
    config = SolverConfig(epsilon=1e-8, max_iterations=10000)

    lines = [f"{'n':<8}{'method':<14}{'ms':<12}vs-gauss-jordan"]
    for n in sizes:
        system = random_dominant_system(n, rng)
        runs = {
            Method.CRAMER: lambda: solve_cramer(system, config),
            Method.GAUSS_JORDAN: lambda: solve_gauss_jordan(system, config),
            Method.GAUSS_SEIDEL: lambda: solve_iterative(
                system, Method.GAUSS_SEIDEL, None, config
            ),
            Method.JACOBI: lambda: solve_iterative(system, Method.JACOBI, None, config),
        }
        seconds: dict[Method, float | None] = {}
        for method, run in runs.items():
            try:
                seconds[method] = _best_of_three(run)
            except LinsysError:
                seconds[method] = None
        baseline = seconds[Method.GAUSS_JORDAN]
        for method in runs:
            elapsed = seconds[method]
            if elapsed is None:
                ms, ratio = "-", "-"
            else:
                ms = f"{elapsed * 1e3:.3f}"
                ratio = f"{elapsed / baseline:.2f}" if baseline else "-"
            lines.append(f"{n:<8}{method.value:<14}{ms:<12}{ratio}")
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="system file to load")
    parser.add_argument(
        "--epsilon", type=float, default=0.01, help="convergence tolerance (default 0.01)"
    )
    parser.add_argument(
        "--max-iter", type=int, default=1000, help="sweep budget (default 1000)"
    )
    parser.add_argument(
        "--criterion",
        choices=("abs", "rel"),
        default="abs",
        help="convergence measure: absolute delta or relative error",
    )
    parser.add_argument(
        "--singular-tol",
        type=float,
        default=1e-12,
        help="|det| at or below this counts as singular (default 1e-12)",
    )
    parser.add_argument("--guess", help='initial iterate, e.g. "0;0;0"')


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linsys", description="Dense linear-system solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a system with one method")
    solve.add_argument(
        "--method",
        required=True,
        choices=[m.value for m in Method],
        help="solving method",
    )
    _add_solver_flags(solve)
    solve.add_argument("--trace", help="write the iteration trace to this CSV file")
    solve.set_defaults(handler=cmd_solve)

    compare = sub.add_parser(
        "compare", help="run all methods and report deviations from the Cramer reference"
    )
    _add_solver_flags(compare)
    compare.set_defaults(handler=cmd_compare)

    bench = sub.add_parser("bench", help="time every method on random dominant systems")
    bench.add_argument("--sizes", required=True, help="comma-separated system sizes")
    bench.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.handler(args)
    except (UsageError, LinsysError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
