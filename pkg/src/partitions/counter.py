"""
Partition counts behind the classification of minimal balanced 2-subset families.

b(d) counts partitions of d into parts 2, 3, 5, 7, ... (the block-size shapes),
q(d) counts partitions of d into odd parts, and

    b(d) = q(d) - q(d-1) + q(d-2) - ... + (-1)^d q(0).

All counts are Python integers, so nothing overflows.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterable, Iterator, List, Optional, Tuple

from src.errors import InputError
from src.twosubsets.generator import is_block_size

logger = logging.getLogger(__name__)


def _check_max_d(max_d: int) -> None:
    if max_d < 0:
        raise InputError(f"max_d must be >= 0, got {max_d}")


def count_partitions(max_d: int, parts: Iterable[int]) -> List[int]:
    """
    Number of partitions of every d <= max_d into the given parts (coin-change DP).
    """
    counts = [1] + [0] * max_d
    for part in parts:
        for total in range(part, max_d + 1):
            counts[total] += counts[total - part]
    return counts


def odd_partitions(max_d: int) -> List[int]:
    """q(0..max_d): partitions into odd parts."""
    _check_max_d(max_d)
    return count_partitions(max_d, range(1, max_d + 1, 2))


def balanced_partitions(max_d: int) -> List[int]:
    """b(0..max_d): partitions into parts 2 and odd parts >= 3."""
    _check_max_d(max_d)
    return count_partitions(
        max_d, [p for p in range(2, max_d + 1) if is_block_size(p)]
    )


def _times_geometric(series: List[int], part: int, sign: int = 1) -> List[int]:
    """Multiply a truncated series by 1 / (1 - sign * x^part)."""
    result = list(series)
    for k in range(part, len(result)):
        result[k] += sign * result[k - part]
    return result


def generating_series(max_d: int) -> List[int]:
    """
    Coefficients of 1/(1+x) * prod_{i>=0} 1/(1 - x^(2i+1)) up to x^max_d.
    """
    _check_max_d(max_d)
    series = _times_geometric([1] + [0] * max_d, 1, sign=-1)
    for part in range(1, max_d + 1, 2):
        series = _times_geometric(series, part)
    return series


def simplified_generating_series(max_d: int) -> List[int]:
    """
    Coefficients of 1/(1 - x^2) * prod_{i>=1} 1/(1 - x^(2i+1)) up to x^max_d.
    """
    _check_max_d(max_d)
    series = _times_geometric([1] + [0] * max_d, 2)
    for part in range(3, max_d + 1, 2):
        series = _times_geometric(series, part)
    return series


def block_size_shapes(
    d: int, largest: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """
    Partitions of d into parts 2, 3, 5, ..., as non-increasing tuples.
    """
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for part in range(min(d, largest), 1, -1):
        if is_block_size(part):
            for rest in block_size_shapes(d - part, part):
                yield (part,) + rest


def cycles_per_block(size: int) -> int:
    """Edge sets a block can carry: 1 for a pair, (m-1)!/2 cycles otherwise."""
    return 1 if size == 2 else factorial(size - 1) // 2


def count_labeled_minimal(d: int) -> int:
    """
    Number of minimal balanced 2-subset families of [d], without enumerating them.

    For each block-size shape with multiplicities m_s the number of set
    partitions is d! / prod(s!^m_s * m_s!), and each block of size s carries
    cycles_per_block(s) edge sets.

    Raises:
        InputError: If d < 2
    """
    if d < 2:
        raise InputError(f"count_labeled_minimal needs d >= 2, got {d}")
    total = 0
    for shape in block_size_shapes(d):
        multiplicities = Counter(shape)
        partitions = factorial(d) // prod(
            factorial(s) ** m * factorial(m) for s, m in multiplicities.items()
        )
        total += partitions * prod(cycles_per_block(s) for s in shape)
    return total


def labeled_counts(max_d: int) -> List[int]:
    """
    Labelled family counts for d = 0..max_d by recurrence on the block holding
    element 1: L(n) = sum_s C(n-1, s-1) * cycles_per_block(s) * L(n-s).

    L(0) = 1 counts the empty family and L(1) = 0.
    """
    _check_max_d(max_d)
    counts = [1] + [0] * max_d
    for n in range(1, max_d + 1):
        counts[n] = sum(
            comb(n - 1, s - 1) * cycles_per_block(s) * counts[n - s]
            for s in range(2, n + 1)
            if is_block_size(s)
        )
    return counts


@dataclass(frozen=True)
class PartitionTable:
    """q(d), b(d) and labelled family counts for d = 0..max_d."""

    max_d: int
    q: Tuple[int, ...]
    b: Tuple[int, ...]
    labeled: Tuple[int, ...]

    @classmethod
    def build(cls, max_d: int) -> "PartitionTable":
        return cls(
            max_d,
            tuple(odd_partitions(max_d)),
            tuple(balanced_partitions(max_d)),
            tuple(labeled_counts(max_d)),
        )

    def alternating_sum(self, d: int) -> int:
        return sum((-1) ** i * self.q[d - i] for i in range(d + 1))


@dataclass(frozen=True)
class IdentityReport:
    """Failures of the alternating identity and of the series-vs-DP comparison."""

    max_d: int
    identity_failures: Tuple[Tuple[int, int, int], ...]
    series_failures: Tuple[Tuple[int, int, int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.identity_failures and not self.series_failures


def check_alternating_identity(max_d: int) -> IdentityReport:
    """
    Verify b(d) = sum_i (-1)^i q(d-i) and both generating-series forms against the DP.

    Args:
        max_d: Largest d to check

    Returns:
        Report listing (d, b, alternating sum) identity failures and
        (d, dp, product series, simplified series) series failures
    """
    table = PartitionTable.build(max_d)
    product = generating_series(max_d)
    simplified = simplified_generating_series(max_d)
    identity_failures = []
    series_failures = []
    for d in range(max_d + 1):
        alternating = table.alternating_sum(d)
        if alternating != table.b[d]:
            identity_failures.append((d, table.b[d], alternating))
        if not table.b[d] == product[d] == simplified[d]:
            series_failures.append((d, table.b[d], product[d], simplified[d]))
    report = IdentityReport(max_d, tuple(identity_failures), tuple(series_failures))
    logger.info(
        "Alternating identity up to d=%d: %s",
        max_d,
        "holds" if report.holds else "FAILS",
    )
    return report
