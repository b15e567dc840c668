"""Derivative-free bounded minimization.

A deterministic Nelder-Mead simplex with standard coefficients (reflection 1,
expansion 2, contraction 0.5, shrink 0.5).  Candidate points are clamped into
the box before every evaluation, so the objective is only ever called at
feasible points.  Non-finite objective values away from the start are
replaced by a large penalty so the simplex retreats from them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_PENALTY = 1e30


@dataclass(frozen=True)
class BoundedProblem:
    """An objective over an axis-aligned box."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    objective: Callable[[np.ndarray], float]

    def __post_init__(self) -> None:
        if len(self.lower) != len(self.upper) or not self.lower:
            raise ValueError("lower and upper bounds must be non-empty and equal length")
        for lo, hi in zip(self.lower, self.upper):
            if not lo < hi:
                raise ValueError(f"need lower < upper, got [{lo}, {hi}]")

    @property
    def dimension(self) -> int:
        return len(self.lower)


@dataclass(frozen=True)
class OptimResult:
    argmin: tuple[float, ...]
    value: float
    evaluations: int
    converged: bool


class _BudgetExhausted(Exception):
    pass


def minimize_bounded(
    problem: BoundedProblem,
    start: Sequence[float],
    tol: float = 1e-8,
    max_evals: int = 2000,
) -> OptimResult:
    """Nelder-Mead descent from ``start``.

    Converged means the spread of objective values across the simplex fell
    below ``tol``.  When the evaluation budget runs out first, the best point
    seen so far is returned with ``converged=False``.  The returned value is
    never worse than the objective at ``start``.
    """
    lower = np.asarray(problem.lower, dtype=float)
    upper = np.asarray(problem.upper, dtype=float)
    x0 = np.asarray(start, dtype=float)
    if x0.shape != lower.shape:
        raise ValueError(f"start has dimension {x0.size}, expected {lower.size}")
    if np.any(x0 < lower) or np.any(x0 > upper):
        raise ValueError("start point outside bounds")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_evals < 1:
        raise ValueError("max_evals must be at least 1")

    evals = 0

    def evaluate(x: np.ndarray, *, at_start: bool = False) -> float:
        nonlocal evals
        if evals >= max_evals:
            raise _BudgetExhausted
        evals += 1
        value = float(problem.objective(x))
        if not math.isfinite(value):
            if at_start:
                raise ValueError(f"objective is non-finite at the start point {tuple(x)}")
            return _PENALTY
        return value

    def clamp(x: np.ndarray) -> np.ndarray:
        return np.minimum(np.maximum(x, lower), upper)

    n = problem.dimension
    simplex = [x0.copy()]
    fvals = [evaluate(x0, at_start=True)]
    # Initial steps are 10% of the box width per coordinate, flipped downward
    # when that would leave the box.
    steps = 0.1 * (upper - lower)
    try:
        for i in range(n):
            vertex = x0.copy()
            vertex[i] = x0[i] + steps[i] if x0[i] + steps[i] <= upper[i] else x0[i] - steps[i]
            simplex.append(vertex)
            fvals.append(evaluate(vertex))

        converged = False
        while True:
            order = np.argsort(fvals, kind="stable")
            simplex = [simplex[k] for k in order]
            fvals = [fvals[k] for k in order]
            if fvals[-1] - fvals[0] < tol:
                converged = True
                break

            centroid = np.mean(simplex[:-1], axis=0)
            reflected = clamp(centroid + (centroid - simplex[-1]))
            f_reflected = evaluate(reflected)
            if f_reflected < fvals[0]:
                expanded = clamp(centroid + 2.0 * (centroid - simplex[-1]))
                f_expanded = evaluate(expanded)
                if f_expanded < f_reflected:
                    simplex[-1], fvals[-1] = expanded, f_expanded
                else:
                    simplex[-1], fvals[-1] = reflected, f_reflected
            elif f_reflected < fvals[-2]:
                simplex[-1], fvals[-1] = reflected, f_reflected
            else:
                if f_reflected < fvals[-1]:
                    contracted = clamp(centroid + 0.5 * (reflected - centroid))
                else:
                    contracted = clamp(centroid - 0.5 * (centroid - simplex[-1]))
                f_contracted = evaluate(contracted)
                if f_contracted < min(f_reflected, fvals[-1]):
                    simplex[-1], fvals[-1] = contracted, f_contracted
                else:
                    # Shrink everything toward the current best vertex.
                    for k in range(1, n + 1):
                        simplex[k] = clamp(simplex[0] + 0.5 * (simplex[k] - simplex[0]))
                        fvals[k] = evaluate(simplex[k])
    except _BudgetExhausted:
        converged = False

    best = int(np.argmin(fvals))
    return OptimResult(
        argmin=tuple(float(v) for v in simplex[best]),
        value=fvals[best],
        evaluations=evals,
        converged=converged,
    )


def multistart_minimize(
    problem: BoundedProblem,
    grid_points_per_dim: int,
    tol: float = 1e-8,
    max_evals: int = 2000,
    extra_starts: Sequence[Sequence[float]] = (),
) -> OptimResult:
    """Run :func:`minimize_bounded` from a regular grid of starts.

    One grid point per dimension means the box center; otherwise the grid is
    evenly spaced including both bounds.  ``extra_starts`` are appended after
    the grid (useful for warm-starting from a known good point).  The best
    run wins, ties going to the earliest start; ``evaluations`` is the total
    across all runs and ``max_evals`` is the per-run budget.
    """
    if grid_points_per_dim < 1:
        raise ValueError("grid_points_per_dim must be at least 1")
    axes = []
    for lo, hi in zip(problem.lower, problem.upper):
        if grid_points_per_dim == 1:
            axes.append([(lo + hi) / 2.0])
        else:
            axes.append(list(np.linspace(lo, hi, grid_points_per_dim)))

    best: OptimResult | None = None
    total_evals = 0
    starts = list(itertools.product(*axes)) + [tuple(s) for s in extra_starts]
    for start in starts:
        result = minimize_bounded(problem, start, tol=tol, max_evals=max_evals)
        total_evals += result.evaluations
        if best is None or result.value < best.value:
            best = result
    assert best is not None
    return OptimResult(
        argmin=best.argmin,
        value=best.value,
        evaluations=total_evals,
        converged=best.converged,
    )
