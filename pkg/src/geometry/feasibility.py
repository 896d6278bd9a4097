"""
Exact feasibility for systems A z = b, z >= 0, by phase-one simplex pivoting.

Pivots follow Bland's rule (lowest-index entering column, ties in the ratio
test broken by lowest basic variable index), so the solve always terminates and
identical inputs give identical certificates.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.errors import InputError
from src.geometry.families import SubsetFamily
from src.geometry.rational import Point
from src.monitors.search_monitor import SearchMonitor

logger = logging.getLogger(__name__)


class FeasibilityTableau:
    """Phase-one tableau with one artificial variable per row."""

    def __init__(
        self, matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
    ):
        """
        Initialize the tableau for A z = b.

        Args:
            matrix: Row-major coefficients, one row per equation
            rhs: Right-hand side, one entry per equation
        """
        if len(matrix) != len(rhs):
            raise InputError(f"{len(matrix)} rows but {len(rhs)} right-hand sides")
        self.m = len(rhs)
        self.n = len(matrix[0]) if matrix else 0
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i, row in enumerate(matrix):
            if len(row) != self.n:
                raise InputError(f"Row {i} has {len(row)} entries, expected {self.n}")
            sign = -1 if rhs[i] < 0 else 1
            artificial = [Fraction(0)] * self.m
            artificial[i] = Fraction(1)
            self.rows.append([Fraction(sign * a) for a in row] + artificial)
            self.rhs.append(Fraction(sign * rhs[i]))
        self.basis = [self.n + i for i in range(self.m)]
        # reduced costs of "minimize the sum of artificials"
        self.reduced = [
            -sum((self.rows[i][j] for i in range(self.m)), Fraction(0))
            for j in range(self.n)
        ] + [Fraction(0)] * self.m
        self.pivots = 0

    def _entering(self) -> Optional[int]:
        for j, cost in enumerate(self.reduced):
            if cost < 0:
                return j
        return None

    def _leaving(self, j: int) -> int:
        candidates = [
            (self.rhs[i] / self.rows[i][j], self.basis[i], i)
            for i in range(self.m)
            if self.rows[i][j] > 0
        ]
        # phase one is bounded below by zero, so a ratio always exists
        return min(candidates)[2]

    def _pivot(self, i: int, j: int) -> None:
        lead = self.rows[i][j]
        self.rows[i] = [a / lead for a in self.rows[i]]
        self.rhs[i] /= lead
        pivot_row = self.rows[i]
        for k in range(self.m):
            factor = self.rows[k][j]
            if k != i and factor:
                self.rows[k] = [a - factor * p for a, p in zip(self.rows[k], pivot_row)]
                self.rhs[k] -= factor * self.rhs[i]
        factor = self.reduced[j]
        self.reduced = [c - factor * p for c, p in zip(self.reduced, pivot_row)]
        self.basis[i] = j
        self.pivots += 1

    def solve(self) -> Optional[Tuple[Fraction, ...]]:
        """
        Run phase one to optimality.

        Returns:
            A nonnegative solution of the original system, or None if infeasible
        """
        while (j := self._entering()) is not None:
            self._pivot(self._leaving(j), j)
        infeasibility = sum(
            (self.rhs[i] for i, var in enumerate(self.basis) if var >= self.n),
            Fraction(0),
        )
        if infeasibility > 0:
            return None
        values = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                values[var] = self.rhs[i]
        return tuple(values)


def solve_nonnegative(
    matrix: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    monitor: Optional[SearchMonitor] = None,
) -> Optional[Tuple[Fraction, ...]]:
    """
    Find z >= 0 with A z = b exactly.

    Args:
        matrix: Row-major coefficients
        rhs: Right-hand side
        monitor: Optional metrics sink

    Returns:
        A solution vector, or None when the system is infeasible
    """
    tableau = FeasibilityTableau(matrix, rhs)
    solution = tableau.solve()
    if monitor is not None:
        monitor.record_solve(tableau.pivots)
    logger.debug(
        "Feasibility solve %dx%d: %s after %d pivots",
        tableau.m,
        tableau.n,
        "feasible" if solution is not None else "infeasible",
        tableau.pivots,
    )
    return solution


class WitnessForm(Enum):
    CONVEX_COMBINATION = "convex_combination"
    SHAPLEY_COVER = "shapley_cover"


@dataclass(frozen=True)
class BalancedWitness:
    """Nonnegative weights certifying balancedness, one per generator or member."""

    weights: Tuple[Fraction, ...]
    form: WitnessForm

    def satisfies_convex(self, target: Point, generators: Sequence[Point]) -> bool:
        """Exact check of weights >= 0, sum 1, and weighted point sum == target."""
        if self.form is not WitnessForm.CONVEX_COMBINATION:
            return False
        if len(self.weights) != len(generators) or any(w < 0 for w in self.weights):
            return False
        if sum(self.weights, Fraction(0)) != 1:
            return False
        for k, coordinate in enumerate(target.coords):
            total = sum(
                (w * g.coords[k] for w, g in zip(self.weights, generators)), Fraction(0)
            )
            if total != coordinate:
                return False
        return True

    def satisfies_cover(self, family: SubsetFamily, d: int) -> bool:
        """Exact check of weights >= 0 and sum of weighted indicator vectors == 1."""
        if self.form is not WitnessForm.SHAPLEY_COVER:
            return False
        if len(self.weights) != len(family) or any(w < 0 for w in self.weights):
            return False
        coverage = [Fraction(0)] * (d + 1)
        for weight, member in zip(self.weights, family):
            for element in member:
                if not 1 <= element <= d:
                    return False
                coverage[element] += weight
        return all(c == 1 for c in coverage[1:])


def convex_membership(
    target: Point,
    generators: Sequence[Point],
    monitor: Optional[SearchMonitor] = None,
) -> Optional[BalancedWitness]:
    """
    Decide whether ``target`` lies in the convex hull of ``generators``.

    Args:
        target: The point to test
        generators: Nonempty list of points of the same dimension
        monitor: Optional metrics sink

    Returns:
        A ConvexCombination witness, or None when target is outside the hull

    Raises:
        InputError: On an empty generator list or a dimension mismatch
    """
    if not generators:
        raise InputError("convex_membership needs at least one generator")
    for index, point in enumerate(generators):
        if point.dimension != target.dimension:
            raise InputError(
                f"Generator {index + 1} has dimension {point.dimension}, "
                f"target has {target.dimension}"
            )
    matrix = [[g.coords[k] for g in generators] for k in range(target.dimension)]
    matrix.append([Fraction(1)] * len(generators))
    rhs = list(target.coords) + [Fraction(1)]
    solution = solve_nonnegative(matrix, rhs, monitor)
    if solution is None:
        return None
    return BalancedWitness(solution, WitnessForm.CONVEX_COMBINATION)


def shapley_weights(
    family: SubsetFamily, d: int, monitor: Optional[SearchMonitor] = None
) -> Optional[BalancedWitness]:
    """
    Solve sum_k w_k * eta_k = (1, ..., 1) with w >= 0.

    Args:
        family: Nonempty subsets of [d]
        d: Size of the ground set
        monitor: Optional metrics sink

    Returns:
        A ShapleyCover witness, or None when the family is not balanced

    Raises:
        InputError: On elements outside [d]
    """
    vectors = family.characteristic_vectors(d)
    matrix = [[Fraction(v[e]) for v in vectors] for e in range(d)]
    solution = solve_nonnegative(matrix, [Fraction(1)] * d, monitor)
    if solution is None:
        return None
    return BalancedWitness(solution, WitnessForm.SHAPLEY_COVER)
