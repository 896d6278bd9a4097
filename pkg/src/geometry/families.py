"""
Set families over [d] = {1, ..., d}: general subset families and 2-subset families.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

from src.errors import InputError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class SubsetFamily:
    """An ordered family of distinct nonempty subsets of [d]."""

    members: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if not self.members:
            raise InputError("A subset family must have at least one member")
        seen = set()
        for member in self.members:
            if not member:
                raise InputError("Family members must be nonempty")
            if member in seen:
                raise InputError(f"Duplicate family member {sorted(member)}")
            seen.add(member)

    @classmethod
    def of(cls, members: Iterable[Iterable[int]]) -> "SubsetFamily":
        return cls(tuple(frozenset(m) for m in members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FrozenSet[int]]:
        return iter(self.members)

    def check_range(self, d: int) -> None:
        """
        Raises:
            InputError: If any element lies outside [d]
        """
        for member in self.members:
            for element in member:
                if not 1 <= element <= d:
                    raise InputError(
                        f"Element {element} of {sorted(member)} is outside [1, {d}]"
                    )

    def characteristic_vectors(self, d: int) -> Tuple[Tuple[int, ...], ...]:
        """The 0/1 indicator vector of every member, in family order."""
        self.check_range(d)
        return tuple(
            tuple(1 if e in member else 0 for e in range(1, d + 1))
            for member in self.members
        )


@dataclass(frozen=True)
class TwoSubsetFamily:
    """
    A family of distinct 2-subsets of [d].

    Pairs are stored as (i, j) with i < j, sorted lexicographically.
    """

    d: int
    pairs: Tuple[Pair, ...]

    def __post_init__(self):
        if self.d < 2:
            raise InputError(f"2-subset families need d >= 2, got d={self.d}")
        for i, j in self.pairs:
            if not (1 <= i < j <= self.d):
                raise InputError(f"Pair ({i}, {j}) is not a 2-subset of [1, {self.d}]")
        if list(self.pairs) != sorted(set(self.pairs)):
            raise InputError("Pairs must be distinct and in canonical order")

    @classmethod
    def of(cls, d: int, pairs: Iterable[Sequence[int]]) -> "TwoSubsetFamily":
        """
        Build a family from pairs in any order and orientation.

        Raises:
            InputError: On duplicate pairs, loops, or elements outside [d]
        """
        normalized = []
        for pair in pairs:
            if len(pair) != 2:
                raise InputError(f"Expected a pair, got {list(pair)}")
            i, j = int(pair[0]), int(pair[1])
            if i == j:
                raise InputError(f"Pair ({i}, {j}) repeats an element")
            normalized.append((min(i, j), max(i, j)))
        duplicates = sorted({p for p in normalized if normalized.count(p) > 1})
        if duplicates:
            raise InputError(f"Duplicate pairs: {duplicates}")
        return cls(d, tuple(sorted(normalized)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def support(self) -> FrozenSet[int]:
        """Elements of [d] covered by at least one pair."""
        return frozenset(e for pair in self.pairs for e in pair)

    def as_subset_family(self) -> SubsetFamily:
        return SubsetFamily.of(self.pairs)

    def key(self) -> FrozenSet[Pair]:
        return frozenset(self.pairs)


def complete_family(d: int) -> TwoSubsetFamily:
    """All C(d, 2) pairs of [d] in canonical order."""
    return TwoSubsetFamily(d, tuple(combinations(range(1, d + 1), 2)))
