"""Deterministic maximizers for the capacity optimizations.

Two tools: a coarse-to-fine grid search over the diagonal input simplex
{alpha, beta, delta >= 0, alpha + 2 beta + delta = 1}, parametrized by
(alpha, delta) with beta eliminated, and a one-dimensional golden-section
search cross-checked against a flat grid.  Both report the best point
actually evaluated, so the returned value always equals the objective at
the returned point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import inf, sqrt

import numpy as np

__all__ = [
    "OptimResult",
    "SimplexPoint",
    "maximize_1d",
    "maximize_simplex",
    "scan_simplex",
]

SIMPLEX_TOL = 1e-12
_INV_PHI = (sqrt(5.0) - 1.0) / 2.0
_MAX_MOVES_PER_LEVEL = 10_000


@dataclass(frozen=True)
class SimplexPoint:
    """Populations (alpha, beta, beta, delta) of a diagonal two-qubit state."""

    alpha: float
    beta: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "delta"):
            value = getattr(self, name)
            if value < -SIMPLEX_TOL:
                raise ValueError(f"{name} must be nonnegative, got {value}")
        total = self.alpha + 2.0 * self.beta + self.delta
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"populations must satisfy alpha + 2 beta + delta = 1, got {total}")

    @classmethod
    def from_alpha_delta(cls, alpha: float, delta: float) -> "SimplexPoint":
        return cls(alpha, max(0.0, 0.5 * (1.0 - alpha - delta)), delta)


@dataclass(frozen=True)
class OptimResult:
    """Best value found, where it was found, and search diagnostics."""

    value: float
    point: "SimplexPoint | float"
    evaluations: int
    grid_step_final: float


def maximize_simplex(
    objective,
    coarse_step: float = 1e-2,
    refine_tol: float = 1e-7,
    grid_objective=None,
) -> OptimResult:
    """Grid scan of the (alpha, delta) triangle followed by local refinement.

    The coarse scan walks alpha, then delta, in ascending order; ties keep
    the first point found, which makes the search deterministic.  The local
    stage hill-climbs on a 5x5 stencil and halves the step until it drops
    below ``refine_tol``, so the reported value never falls under the
    coarse optimum.  Boundary faces are evaluated directly, relying on the
    objective treating 0 log 0 as 0.

    ``grid_objective``, when given, must be the same function vectorized
    over (alpha, delta) numpy arrays; it only accelerates the coarse scan.
    """
    n = int(round(1.0 / coarse_step))
    evaluations = 0
    best_value = -inf
    best_a = best_d = 0.0

    if grid_objective is not None:
        for i in range(n + 1):
            a = i * coarse_step
            deltas = np.arange(n - i + 1, dtype=float) * coarse_step
            values = np.asarray(grid_objective(a, deltas), dtype=float)
            evaluations += values.size
            j = int(np.argmax(values))
            if values[j] > best_value:
                best_value = float(values[j])
                best_a, best_d = a, float(deltas[j])
    else:
        for i in range(n + 1):
            a = i * coarse_step
            for j in range(n - i + 1):
                d = j * coarse_step
                value = objective(SimplexPoint.from_alpha_delta(a, d))
                evaluations += 1
                if value > best_value:
                    best_value = value
                    best_a, best_d = a, d

    step = coarse_step
    h = coarse_step / 2.0
    while h >= refine_tol:
        step = h
        moves = 0
        improved = True
        while improved and moves < _MAX_MOVES_PER_LEVEL:
            improved = False
            for di in range(-2, 3):
                for dj in range(-2, 3):
                    if di == 0 and dj == 0:
                        continue
                    a = best_a + di * h
                    d = best_d + dj * h
                    if a < 0.0 or d < 0.0 or a + d > 1.0 + SIMPLEX_TOL:
                        continue
                    value = objective(SimplexPoint.from_alpha_delta(a, d))
                    evaluations += 1
                    if value > best_value:
                        best_value = value
                        best_a, best_d = a, d
                        improved = True
                        moves += 1
        h /= 2.0

    point = SimplexPoint.from_alpha_delta(best_a, best_d)
    if grid_objective is not None:
        best_value = float(objective(point))
    return OptimResult(best_value, point, evaluations, step)


def scan_simplex(grid_objective, step: float) -> OptimResult:
    """Exhaustive flat grid scan, the slow verification mode.

    ``grid_objective(alpha, delta)`` must broadcast over numpy arrays.
    """
    n = int(round(1.0 / step))
    evaluations = 0
    best_value = -inf
    best_a = best_d = 0.0
    for i in range(n + 1):
        a = i * step
        deltas = np.arange(n - i + 1, dtype=float) * step
        values = np.asarray(grid_objective(a, deltas), dtype=float)
        evaluations += values.size
        j = int(np.argmax(values))
        if values[j] > best_value:
            best_value = float(values[j])
            best_a, best_d = a, float(deltas[j])
    return OptimResult(best_value, SimplexPoint.from_alpha_delta(best_a, best_d), evaluations, step)


def maximize_1d(
    objective, lo: float, hi: float, tol: float = 1e-9, grid_points: int = 1000
) -> OptimResult:
    """Golden-section ascent cross-checked against a flat grid scan.

    Golden section assumes a unimodal objective; the grid pass protects
    the result when that assumption is off.  The better of the two
    candidates is returned (ties keep the golden-section point).
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")

    evaluations = 0
    best_x = lo
    best_f = -inf

    def consider(x: float, f: float) -> None:
        nonlocal best_x, best_f
        if f > best_f:
            best_x, best_f = x, f

    for x in (lo, hi):
        f = objective(x)
        evaluations += 1
        consider(x, f)

    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = objective(c)
    fd = objective(d)
    evaluations += 2
    consider(c, fc)
    consider(d, fd)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = objective(c)
            evaluations += 1
            consider(c, fc)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = objective(d)
            evaluations += 1
            consider(d, fd)

    spacing = (hi - lo) / grid_points
    for k in range(grid_points + 1):
        x = lo + spacing * k
        f = objective(x)
        evaluations += 1
        consider(x, f)

    return OptimResult(best_f, best_x, evaluations, min(b - a, spacing))
