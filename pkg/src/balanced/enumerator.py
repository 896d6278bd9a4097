"""
Enumeration of BS(V), the minimal balanced subsets of a rational point set.

A subset is balanced when the centroid of the whole set lies in its convex hull.
Balancedness is monotone under supersets, so the minimal balanced subsets are
the inclusion-minimal feasible ones, and each has at most affdim(V) + 1 points.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from src.config import Settings
from src.errors import BudgetExceededError, InputError
from src.geometry.feasibility import BalancedWitness, convex_membership
from src.geometry.rational import PointSet
from src.monitors.search_monitor import SearchMonitor

logger = logging.getLogger(__name__)

IndexSubset = Tuple[int, ...]


def normalize_subset(point_set: PointSet, indices: Iterable[int]) -> IndexSubset:
    """
    Validate 0-based indices into ``point_set`` and return them sorted.

    Raises:
        InputError: On an empty subset, a repeated index, or an index out of range
    """
    subset = tuple(indices)
    if not subset:
        raise InputError("An index subset must be nonempty")
    if len(set(subset)) != len(subset):
        raise InputError(f"Repeated index in {list(subset)}")
    for index in subset:
        if not 0 <= index < len(point_set):
            raise InputError(
                f"Index {index} is out of range for {len(point_set)} points"
            )
    return tuple(sorted(subset))


def is_balanced_subset(
    point_set: PointSet,
    indices: Iterable[int],
    monitor: Optional[SearchMonitor] = None,
) -> Optional[BalancedWitness]:
    """
    Test whether the centroid of ``point_set`` lies in the hull of the chosen points.

    Args:
        point_set: The full point set V
        indices: 0-based positions of the subset
        monitor: Optional metrics sink

    Returns:
        A ConvexCombination witness over the subset (in sorted index order), or None
    """
    subset = normalize_subset(point_set, indices)
    return convex_membership(
        point_set.centroid(), point_set.select(subset), monitor
    )


def is_minimal_balanced(
    point_set: PointSet,
    indices: Iterable[int],
    monitor: Optional[SearchMonitor] = None,
) -> bool:
    """
    True iff the subset is balanced and no single-index removal stays balanced.
    """
    subset = normalize_subset(point_set, indices)
    if is_balanced_subset(point_set, subset, monitor) is None:
        return False
    if len(subset) == 1:
        return True
    for drop in subset:
        smaller = tuple(i for i in subset if i != drop)
        if is_balanced_subset(point_set, smaller, monitor) is not None:
            return False
    return True


@dataclass(frozen=True)
class MinimalBalancedCatalog:
    """BS(V) with one exact witness per member, in canonical order."""

    point_set: PointSet
    members: Tuple[IndexSubset, ...]
    witnesses: Tuple[BalancedWitness, ...]
    subsets_examined: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def as_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(m) for m in self.members)

    def verify(self) -> List[str]:
        """
        Re-check every catalog invariant exactly.

        Returns:
            A list of problems; empty when the catalog is sound
        """
        problems = []
        target = self.point_set.centroid()
        bound = self.point_set.affine_dimension() + 1
        for member, witness in zip(self.members, self.witnesses):
            if not witness.satisfies_convex(target, self.point_set.select(member)):
                problems.append(f"witness for {list(member)} does not verify")
            if len(member) > bound:
                problems.append(f"{list(member)} exceeds the size bound {bound}")
            if len(member) > 1:
                for drop in member:
                    rest = tuple(i for i in member if i != drop)
                    if is_balanced_subset(self.point_set, rest) is not None:
                        problems.append(f"{list(member)} minus {drop} is balanced")
        sets = [frozenset(m) for m in self.members]
        for a, b in combinations(sets, 2):
            if a <= b or b <= a:
                problems.append(f"{sorted(a)} and {sorted(b)} are nested")
        return problems


def enumerate_minimal_balanced(
    point_set: PointSet,
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> MinimalBalancedCatalog:
    """
    Compute BS(V) by level-order search with superset pruning.

    Subsets are visited by increasing size, lexicographically within a size,
    up to affdim(V) + 1 points. A subset containing an already found member is
    skipped without a solve.

    Args:
        point_set: The point set V
        settings: Budget settings; defaults to ``Settings()``
        monitor: Optional metrics sink

    Returns:
        The complete catalog of minimal balanced subsets

    Raises:
        BudgetExceededError: When more subsets than the budget would be examined
    """
    settings = settings or Settings()
    target = point_set.centroid()
    max_size = min(len(point_set), point_set.affine_dimension() + 1)
    members: List[IndexSubset] = []
    witnesses: List[BalancedWitness] = []
    found: List[FrozenSet[int]] = []
    examined = 0

    for size in range(1, max_size + 1):
        for subset in combinations(range(len(point_set)), size):
            examined += 1
            if examined > settings.enumeration_budget:
                logger.error(
                    "Enumeration budget %d exhausted at size %d",
                    settings.enumeration_budget,
                    size,
                )
                raise BudgetExceededError(
                    "balanced-subset enumeration budget exceeded",
                    examined - 1,
                    settings.enumeration_budget,
                    partial=members,
                )
            candidate = frozenset(subset)
            if any(member <= candidate for member in found):
                continue
            witness = convex_membership(target, point_set.select(subset), monitor)
            if witness is not None:
                logger.debug("Minimal balanced subset %s", subset)
                members.append(subset)
                witnesses.append(witness)
                found.append(candidate)

    if monitor is not None:
        monitor.record_subsets(examined)
        monitor.set_catalog_size(len(members))
    logger.info(
        "Found %d minimal balanced subsets of %d points (%d subsets examined)",
        len(members),
        len(point_set),
        examined,
    )
    return MinimalBalancedCatalog(point_set, tuple(members), tuple(witnesses), examined)


def brute_force_minimal_balanced(
    point_set: PointSet,
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> Set[FrozenSet[int]]:
    """
    Independent oracle: solve every nonempty subset, keep the inclusion-minimal ones.

    No size bound and no pruning are used.

    Raises:
        InputError: If the point set is larger than the configured oracle ceiling
    """
    settings = settings or Settings()
    if len(point_set) > settings.brute_force_max_points:
        raise InputError(
            f"Brute force is limited to {settings.brute_force_max_points} points, "
            f"got {len(point_set)}"
        )
    target = point_set.centroid()
    balanced = []
    for mask in range(1, 1 << len(point_set)):
        subset = [i for i in range(len(point_set)) if mask >> i & 1]
        if convex_membership(target, point_set.select(subset), monitor) is not None:
            balanced.append(mask)
    if monitor is not None:
        monitor.record_subsets((1 << len(point_set)) - 1)
    minimal = set()
    for mask in balanced:
        if not any(other != mask and other & mask == other for other in balanced):
            minimal.add(frozenset(i for i in range(len(point_set)) if mask >> i & 1))
    return minimal
