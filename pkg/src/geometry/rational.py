"""
Exact rational points and point sets.
All coordinates are ``fractions.Fraction``; nothing in this package rounds.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import InputError

logger = logging.getLogger(__name__)

RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Convert an integer, Fraction or "p/q" string into a Fraction.

    Args:
        value: The value to convert

    Returns:
        The exact rational value

    Raises:
        InputError: For floats, decimal strings, or a zero denominator
    """
    if isinstance(value, bool):
        raise InputError(f"Not a rational: {value!r}")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_PATTERN.match(text):
            raise InputError(f"Invalid rational {value!r}: expected 'p/q' or 'p'")
        try:
            return Fraction(text)
        except ZeroDivisionError as e:
            raise InputError(f"Invalid rational {value!r}: zero denominator") from e
    raise InputError(f"Not a rational: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """Format as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Point:
    """A point with exact rational coordinates."""

    coords: Tuple[Fraction, ...]

    @classmethod
    def of(cls, coords: Iterable[RationalLike]) -> "Point":
        return cls(tuple(parse_rational(c) for c in coords))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def __sub__(self, other: "Point") -> "Point":
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Point":
        return Point(tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class PointSet:
    """
    A nonempty ordered set of distinct points sharing one dimension.

    Labels are optional display names, one per point.
    """

    points: Tuple[Point, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if not self.points:
            raise InputError("A point set must contain at least one point")
        dimension = self.points[0].dimension
        for index, point in enumerate(self.points):
            if point.dimension != dimension:
                raise InputError(
                    f"Point {index + 1} has dimension {point.dimension}, "
                    f"expected {dimension}"
                )
        seen = {}
        for index, point in enumerate(self.points):
            if point in seen:
                raise InputError(
                    f"Duplicate point {point} at positions "
                    f"{seen[point] + 1} and {index + 1}"
                )
            seen[point] = index
        if self.labels is not None and len(self.labels) != len(self.points):
            raise InputError(
                f"Got {len(self.labels)} labels for {len(self.points)} points"
            )

    @classmethod
    def of(
        cls,
        rows: Iterable[Iterable[RationalLike]],
        labels: Optional[Sequence[str]] = None,
    ) -> "PointSet":
        return cls(
            tuple(Point.of(row) for row in rows),
            tuple(labels) if labels is not None else None,
        )

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Point:
        return self.points[index]

    @property
    def dimension(self) -> int:
        return self.points[0].dimension

    def label(self, index: int) -> str:
        if self.labels is None:
            return f"v{index + 1}"
        return self.labels[index]

    def select(self, indices: Iterable[int]) -> List[Point]:
        return [self.points[i] for i in indices]

    def centroid(self) -> Point:
        return centroid(self)

    def affine_dimension(self) -> int:
        return affine_dimension(self)


def centroid(point_set: PointSet) -> Point:
    """
    Compute the exact center of mass of a point set.

    Args:
        point_set: The points to average

    Returns:
        The coordinatewise average
    """
    count = len(point_set)
    sums = [Fraction(0)] * point_set.dimension
    for point in point_set.points:
        for k, value in enumerate(point.coords):
            sums[k] += value
    return Point(tuple(s / count for s in sums))


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    width = len(matrix[0])
    rank = 0
    for col in range(width):
        pivot = next(
            (r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None
        )
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][col] / lead
            if factor:
                for c in range(col, width):
                    matrix[r][c] -= factor * matrix[rank][c]
        rank += 1
        if rank == len(matrix):
            break
    return rank


def affine_dimension(point_set: PointSet) -> int:
    """
    Dimension of the affine hull, from the rank of the difference matrix.

    Args:
        point_set: The points

    Returns:
        0 for a single point, up to the ambient dimension
    """
    base = point_set.points[0]
    differences = [(p - base).coords for p in point_set.points[1:]]
    return matrix_rank(differences)
