"""
Core non-emptiness for games with singleton and pair coalitions.

Two independent methods:
  - direct: exact feasibility of the core inequalities;
  - theorem1: the Bondareva-Shapley condition sum_S w_S v(S) <= v([d]) over the
    minimal balanced families built from singletons, isolated edges and odd
    cycles (weights 1, 1 and 1/2 per edge).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple

from src.config import Settings
from src.core.game import Game
from src.errors import BudgetExceededError, CoreDisagreementError
from src.geometry.feasibility import solve_nonnegative
from src.monitors.search_monitor import SearchMonitor
from src.twosubsets.classifier import DecompositionBlock
from src.twosubsets.generator import decompositions_on

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoalitionFamily:
    """A minimal balanced family of singletons and pairs, canonically weighted."""

    d: int
    singletons: Tuple[int, ...]
    blocks: Tuple[DecompositionBlock, ...]

    def weighted_coalitions(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        weighted = [((i,), Fraction(1)) for i in self.singletons]
        for block in self.blocks:
            weighted.extend((edge, block.edge_weight) for edge in block.edges)
        return weighted

    def value(self, game: Game) -> Fraction:
        """sum_S w_S v(S) for this family."""
        return sum(
            (w * game.value(coalition) for coalition, w in self.weighted_coalitions()),
            Fraction(0),
        )

    def is_balanced(self) -> bool:
        """Exact check that the weighted indicator vectors sum to all-ones."""
        coverage = [Fraction(0)] * (self.d + 1)
        for coalition, weight in self.weighted_coalitions():
            if weight < 0:
                return False
            for player in coalition:
                coverage[player] += weight
        return all(c == 1 for c in coverage[1:])


@dataclass(frozen=True)
class CoreVerdict:
    """
    Outcome of a core check with its certificate.

    ``allocation`` is present only for a nonempty core found by the direct
    method; ``violating_family`` only for an empty core found by theorem1.
    """

    method: str
    nonempty: bool
    allocation: Optional[Tuple[Fraction, ...]] = None
    violating_family: Optional[CoalitionFamily] = None
    families_checked: int = 0

    def verify(self, game: Game) -> bool:
        """Re-check the attached certificate by exact substitution."""
        allocation = self.allocation
        if allocation is not None and not allocation_in_core(game, allocation):
            return False
        if self.violating_family is not None:
            family = self.violating_family
            if not family.is_balanced() or family.value(game) <= game.grand_value:
                return False
        return True


def allocation_in_core(game: Game, allocation: Tuple[Fraction, ...]) -> bool:
    """Efficiency and coalitional rationality for every singleton and pair, exactly."""
    if len(allocation) != game.d:
        return False
    if sum(allocation, Fraction(0)) != game.grand_value:
        return False
    return all(
        sum(allocation[i - 1] for i in coalition) >= game.value(coalition)
        for coalition in game.coalitions()
    )


def core_direct(game: Game, monitor: Optional[SearchMonitor] = None) -> CoreVerdict:
    """
    Solve for x with sum x = v([d]), x_i >= v(i), x_i + x_j >= v(ij).

    Substituting x_i = v(i) + y_i with y >= 0 and a surplus variable per pair
    gives a system A z = b, z >= 0 for the exact feasibility solver.

    Args:
        game: The game
        monitor: Optional metrics sink

    Returns:
        Nonempty verdict with an allocation, or an empty verdict
    """
    d = game.d
    pairs = list(game.pair_values)
    width = d + len(pairs)
    matrix: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for k, (i, j) in enumerate(pairs):
        row = [Fraction(0)] * width
        row[i - 1] = row[j - 1] = Fraction(1)
        row[d + k] = Fraction(-1)
        matrix.append(row)
        rhs.append(
            game.pair_values[(i, j)]
            - game.singleton_values[i - 1]
            - game.singleton_values[j - 1]
        )
    matrix.append([Fraction(1)] * d + [Fraction(0)] * len(pairs))
    rhs.append(game.grand_value - sum(game.singleton_values, Fraction(0)))

    solution = solve_nonnegative(matrix, rhs, monitor)
    if solution is None:
        logger.info("Direct check: core of the %d-player game is empty", d)
        return CoreVerdict("direct", False)
    allocation = tuple(v + y for v, y in zip(game.singleton_values, solution[:d]))
    logger.info("Direct check: core allocation %s", [str(x) for x in allocation])
    return CoreVerdict("direct", True, allocation=allocation)


def minimal_coalition_families(d: int) -> Iterator[CoalitionFamily]:
    """
    Every minimal balanced family of [d] using only singletons and pairs.

    Order: more singletons first, singleton sets lexicographically, then the
    canonical edge/odd-cycle decompositions of the remaining players.
    """
    players = tuple(range(1, d + 1))
    for count in range(d, -1, -1):
        for singles in combinations(players, count):
            rest = [p for p in players if p not in singles]
            for blocks in decompositions_on(rest):
                yield CoalitionFamily(d, singles, blocks)


def core_via_theorem1(
    game: Game,
    settings: Optional[Settings] = None,
) -> CoreVerdict:
    """
    Bondareva-Shapley check restricted to the minimal balanced families.

    Args:
        game: The game
        settings: Budget for the number of families evaluated

    Returns:
        Empty verdict with the first violating family in canonical order, or a
        nonempty verdict without an allocation

    Raises:
        BudgetExceededError: When more families than the budget would be evaluated
    """
    settings = settings or Settings()
    checked = 0
    for family in minimal_coalition_families(game.d):
        checked += 1
        if checked > settings.enumeration_budget:
            raise BudgetExceededError(
                "core family enumeration budget exceeded",
                checked - 1,
                settings.enumeration_budget,
            )
        total = family.value(game)
        if total > game.grand_value:
            logger.info(
                "Theorem 1 check: family %s has value %s > %s",
                family.weighted_coalitions(),
                total,
                game.grand_value,
            )
            return CoreVerdict(
                "theorem1", False, violating_family=family, families_checked=checked
            )
    logger.info("Theorem 1 check: all %d families satisfied", checked)
    return CoreVerdict("theorem1", True, families_checked=checked)


@dataclass(frozen=True)
class CrossValidation:
    game: Game
    direct: CoreVerdict
    theorem1: CoreVerdict

    @property
    def agree(self) -> bool:
        return self.direct.nonempty == self.theorem1.nonempty

    @property
    def certificates_valid(self) -> bool:
        return self.direct.verify(self.game) and self.theorem1.verify(self.game)


def cross_validate(
    game: Game,
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> CrossValidation:
    """
    Run both checkers and require the same verdict.

    Raises:
        CoreDisagreementError: If the verdicts differ; both are attached
    """
    result = CrossValidation(
        game, core_direct(game, monitor), core_via_theorem1(game, settings)
    )
    if not result.agree:
        logger.error("Core checkers disagree on a %d-player game", game.d)
        raise CoreDisagreementError(result.direct, result.theorem1)
    return result


@dataclass(frozen=True)
class CrossValidationSummary:
    games: int
    nonempty: int
    empty: int
    invalid_certificates: int

    @property
    def passed(self) -> bool:
        return self.invalid_certificates == 0


def cross_validate_all(
    games: Iterable[Game],
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> CrossValidationSummary:
    """Cross-validate a stream of games; the first disagreement raises."""
    total = nonempty = invalid = 0
    for game in games:
        result = cross_validate(game, settings, monitor)
        total += 1
        nonempty += result.direct.nonempty
        if not result.certificates_valid:
            invalid += 1
            logger.error("Certificate failed exact substitution on game %d", total)
    summary = CrossValidationSummary(total, nonempty, total - nonempty, invalid)
    logger.info(
        "Cross-validated %d games: %d nonempty, %d empty",
        total,
        nonempty,
        total - nonempty,
    )
    return summary
