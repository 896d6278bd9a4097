"""
Triangulated discs with a boundary, an optional antipodal involution, and labels.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from src.errors import InputError

logger = logging.getLogger(__name__)

Cell = Tuple[int, ...]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class DiscTriangulation:
    """
    A pure simplicial complex of dimension ``dim`` triangulating a disc.

    ``carriers`` (optional) maps each vertex to the vertices {1, ..., dim+1} of
    the smallest face of the standard simplex containing it; it is present for
    subdivisions of a simplex and drives the Sperner boundary condition.
    """

    dim: int
    vertices: Tuple[int, ...]
    cells: Tuple[Cell, ...]
    boundary_vertices: FrozenSet[int]
    antipode: Optional[Mapping[int, int]] = None
    carriers: Optional[Mapping[int, FrozenSet[int]]] = None

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        if self.dim < 1:
            raise InputError(f"Disc dimension must be >= 1, got {self.dim}")
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise InputError("Vertex ids must be distinct")
        if not self.cells:
            raise InputError("A complex needs at least one maximal cell")
        for cell in self.cells:
            if len(cell) != self.dim + 1 or len(set(cell)) != len(cell):
                raise InputError(
                    f"Cell {list(cell)} must have {self.dim + 1} distinct vertices"
                )
            if list(cell) != sorted(cell):
                raise InputError(f"Cell {list(cell)} must list its vertices sorted")
            unknown = set(cell) - known
            if unknown:
                raise InputError(
                    f"Cell {list(cell)} uses unknown vertices {sorted(unknown)}"
                )
        repeated = [c for c, n in Counter(self.cells).items() if n > 1]
        if repeated:
            raise InputError(f"Repeated cells: {repeated}")
        used = {v for cell in self.cells for v in cell}
        if used != known:
            raise InputError(f"Vertices in no cell: {sorted(known - used)}")

        # a disc is a pseudomanifold with boundary: every ridge lies in one or two cells
        ridge_counts = Counter(
            ridge for cell in self.cells for ridge in combinations(cell, self.dim)
        )
        overfull = [r for r, n in ridge_counts.items() if n > 2]
        if overfull:
            raise InputError(f"Faces shared by more than two cells: {overfull[:3]}")
        boundary = {v for r, n in ridge_counts.items() if n == 1 for v in r}
        if boundary != set(self.boundary_vertices):
            raise InputError(
                f"Declared boundary {sorted(self.boundary_vertices)} differs from "
                f"the boundary of the cells {sorted(boundary)}"
            )

        if self.antipode is not None:
            self._validate_antipode(ridge_counts)
        if self.carriers is not None:
            for vertex in self.vertices:
                carrier = self.carriers.get(vertex)
                if not carrier or not carrier <= set(range(1, self.dim + 2)):
                    raise InputError(f"Vertex {vertex} has no valid carrier face")

    def _validate_antipode(self, ridge_counts: Counter) -> None:
        antipode = self.antipode
        if set(antipode) != set(self.boundary_vertices):
            raise InputError("The antipode must be defined on exactly the boundary")
        for vertex, image in antipode.items():
            if image == vertex:
                raise InputError(f"The antipode fixes boundary vertex {vertex}")
            if antipode.get(image) != vertex:
                raise InputError(f"The antipode is no involution at {vertex}")
        boundary_faces = {r for r, n in ridge_counts.items() if n == 1}
        for face in boundary_faces:
            image = tuple(sorted(antipode[v] for v in face))
            if image not in boundary_faces:
                raise InputError(
                    f"The antipode maps boundary face {list(face)} to a non-face"
                )

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All 1-faces, sorted."""
        return tuple(sorted({e for cell in self.cells for e in combinations(cell, 2)}))

    @cached_property
    def boundary_representatives(self) -> Tuple[int, ...]:
        """One vertex from each antipodal pair (the smaller id)."""
        if self.antipode is None:
            return ()
        return tuple(sorted(v for v, w in self.antipode.items() if v < w))

    @cached_property
    def interior_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in self.boundary_vertices)


@dataclass(frozen=True)
class LabeledComplex:
    """A disc triangulation together with an integer label on every vertex."""

    triangulation: DiscTriangulation
    labels: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        missing = [v for v in self.triangulation.vertices if v not in self.labels]
        if missing:
            raise InputError(f"Vertices without labels: {missing}")

    @property
    def dim(self) -> int:
        return self.triangulation.dim

    @property
    def cells(self) -> Tuple[Cell, ...]:
        return self.triangulation.cells

    def cell_labels(self, cell: Iterable[int]) -> Tuple[int, ...]:
        return tuple(self.labels[v] for v in cell)

    def require_signed(self, palette: Optional[int] = None) -> None:
        """
        Raises:
            InputError: On a zero label or a magnitude above ``palette``
        """
        for vertex, label in self.labels.items():
            if label == 0:
                raise InputError(f"Vertex {vertex} has label 0; labels must be nonzero")
            if palette is not None and abs(label) > palette:
                raise InputError(
                    f"Vertex {vertex} has label {label}, outside +-1..+-{palette}"
                )


@dataclass(frozen=True)
class SignedLabelSet:
    """Nonzero labels; a full set has one label of each magnitude 1..d."""

    labels: FrozenSet[int]

    @classmethod
    def parse(cls, text: str) -> "SignedLabelSet":
        """Parse "+1,-2,+3"."""
        try:
            values = [int(part) for part in text.split(",") if part.strip()]
        except ValueError as e:
            raise InputError(f"Invalid label set {text!r}") from e
        if len(values) != len(set(values)):
            raise InputError(f"Label set {text!r} repeats a label")
        return cls(frozenset(values))

    def require_full(self, d: int) -> None:
        """
        Raises:
            InputError: Unless the set holds exactly one label of each magnitude 1..d
        """
        magnitudes = sorted(abs(label) for label in self.labels)
        if 0 in magnitudes or magnitudes != list(range(1, d + 1)):
            raise InputError(
                f"Label set {sorted(self.labels)} must hold one label of each "
                f"magnitude 1..{d}"
            )

    def negated(self) -> "SignedLabelSet":
        return SignedLabelSet(frozenset(-label for label in self.labels))


def antipode_from_pairs(pairs: Iterable[Tuple[int, int]]) -> Dict[int, int]:
    """Build the involution from unordered pairs."""
    antipode: Dict[int, int] = {}
    for a, b in pairs:
        if a in antipode or b in antipode:
            raise InputError(f"Vertex in more than one antipodal pair: ({a}, {b})")
        antipode[a] = b
        antipode[b] = a
    return antipode
