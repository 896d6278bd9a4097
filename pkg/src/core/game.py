"""
Cooperative games on [d] whose coalitions are singletons, pairs and the grand coalition.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from src.errors import InputError
from src.geometry.families import Pair
from src.geometry.rational import RationalLike, parse_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Game:
    """
    Values of every singleton, every pair and the grand coalition.

    ``defaulted_pairs`` records pairs whose value was filled in as the sum of
    the two singleton values because the input omitted them.
    """

    d: int
    singleton_values: Tuple[Fraction, ...]
    pair_values: Dict[Pair, Fraction]
    grand_value: Fraction
    defaulted_pairs: Tuple[Pair, ...] = field(default=())

    def __post_init__(self):
        if self.d < 2:
            raise InputError(f"A game needs d >= 2 players, got {self.d}")
        if len(self.singleton_values) != self.d:
            raise InputError(
                f"Expected {self.d} singleton values, got {len(self.singleton_values)}"
            )
        expected = set(combinations(range(1, self.d + 1), 2))
        if set(self.pair_values) != expected:
            missing = sorted(expected - set(self.pair_values))
            extra = sorted(set(self.pair_values) - expected)
            raise InputError(
                f"Pair values mismatch: missing {missing}, unexpected {extra}"
            )

    @classmethod
    def build(
        cls,
        d: int,
        singletons: Sequence[RationalLike],
        pairs: Mapping[Tuple[int, int], RationalLike],
        grand: RationalLike,
    ) -> "Game":
        """
        Build a game, defaulting missing pair values to the singleton sum.

        Raises:
            InputError: On malformed values, pairs outside [d], or duplicate pairs
        """
        singleton_values = tuple(parse_rational(v) for v in singletons)
        if len(singleton_values) != d:
            raise InputError(
                f"Expected {d} singleton values, got {len(singleton_values)}"
            )
        pair_values: Dict[Pair, Fraction] = {}
        for raw_pair, value in pairs.items():
            if len(raw_pair) != 2:
                raise InputError(f"Expected a pair, got {list(raw_pair)}")
            i, j = sorted(int(e) for e in raw_pair)
            if i == j or not 1 <= i < j <= d:
                raise InputError(
                    f"Pair {tuple(raw_pair)} is not a 2-subset of [1, {d}]"
                )
            if (i, j) in pair_values:
                raise InputError(f"Duplicate value for pair ({i}, {j})")
            pair_values[(i, j)] = parse_rational(value)
        defaulted = []
        for i, j in combinations(range(1, d + 1), 2):
            if (i, j) not in pair_values:
                pair_values[(i, j)] = singleton_values[i - 1] + singleton_values[j - 1]
                defaulted.append((i, j))
        if defaulted:
            logger.warning(
                "Defaulted %d pair values to singleton sums: %s",
                len(defaulted),
                defaulted,
            )
        return cls(
            d,
            singleton_values,
            dict(sorted(pair_values.items())),
            parse_rational(grand),
            tuple(defaulted),
        )

    def value(self, coalition: Sequence[int]) -> Fraction:
        """v(S) for a singleton, a pair, or the grand coalition."""
        members = tuple(sorted(coalition))
        if len(members) == 1:
            return self.singleton_values[members[0] - 1]
        if len(members) == 2:
            return self.pair_values[members]
        if members == tuple(range(1, self.d + 1)):
            return self.grand_value
        raise InputError(f"Coalition {list(members)} has no value in this game")

    def coalitions(self) -> Iterator[Tuple[int, ...]]:
        """Singletons then pairs, in canonical order."""
        for i in range(1, self.d + 1):
            yield (i,)
        yield from self.pair_values


def additive_game(singletons: Iterable[RationalLike]) -> Game:
    """The game whose pair and grand values are sums of singleton values."""
    values = [parse_rational(v) for v in singletons]
    d = len(values)
    pairs = {
        (i, j): values[i - 1] + values[j - 1]
        for i, j in combinations(range(1, d + 1), 2)
    }
    return Game.build(d, values, pairs, sum(values, Fraction(0)))


def random_game(d: int, rng: random.Random, spread: int = 6) -> Game:
    """
    A random game with small rational values.

    The grand value is the singleton total plus a random surplus, so both empty
    and nonempty cores occur with useful frequency.
    """
    singletons = [
        Fraction(rng.randint(-spread, spread), rng.randint(1, 3)) for _ in range(d)
    ]
    pairs = {
        (i, j): singletons[i - 1]
        + singletons[j - 1]
        + Fraction(rng.randint(-spread, 2 * spread), rng.randint(1, 4))
        for i, j in combinations(range(1, d + 1), 2)
    }
    surplus = Fraction(rng.randint(0, 3 * spread * d), rng.randint(1, 4))
    return Game.build(d, singletons, pairs, sum(singletons, Fraction(0)) + surplus)


def random_games(
    count: int, seed: int, min_d: int = 2, max_d: int = 6
) -> Iterator[Game]:
    """``count`` reproducible random games with d drawn from [min_d, max_d]."""
    if not 2 <= min_d <= max_d:
        raise InputError(f"Need 2 <= min_d <= max_d, got {min_d}, {max_d}")
    rng = random.Random(seed)
    return (random_game(rng.randint(min_d, max_d), rng) for _ in range(count))

