"""
Connects labeled complexes to BS(V): look for a cell whose labels, read as
points of V, contain a minimal balanced subset.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Optional, Tuple

from src.balanced.enumerator import (
    IndexSubset,
    MinimalBalancedCatalog,
    enumerate_minimal_balanced,
)
from src.balanced.point_sets import (
    cross_polytope,
    signed_label_map,
    signed_simplex,
    simplex_label_map,
    simplex_vertices,
)
from src.config import Settings
from src.errors import InputError
from src.geometry.rational import PointSet
from src.lemmas.complex import Cell, LabeledComplex
from src.monitors.search_monitor import SearchMonitor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremBResult:
    """
    A witness cell and the member of BS(V) its labels cover.

    ``found`` is False when no cell qualifies; that outcome marks a candidate
    for reviewing the boundary hypothesis, which is not machine-checked.
    """

    found: bool
    cell: Optional[Cell] = None
    member: Optional[IndexSubset] = None
    note: str = ""


def _check_label_map(
    complex_: LabeledComplex, point_set: PointSet, label_to_point: Mapping[int, int]
) -> None:
    for label in sorted(set(complex_.labels.values())):
        if label not in label_to_point:
            raise InputError(f"Label {label} has no point in V")
        index = label_to_point[label]
        if not 0 <= index < len(point_set):
            raise InputError(
                f"Label {label} maps to index {index}, "
                f"outside the {len(point_set)} points of V"
            )


def cell_points(
    complex_: LabeledComplex, cell: Cell, label_to_point: Mapping[int, int]
) -> FrozenSet[int]:
    return frozenset(label_to_point[label] for label in complex_.cell_labels(cell))


def theorem_b_witness(
    point_set: PointSet,
    complex_: LabeledComplex,
    label_to_point: Mapping[int, int],
    catalog: Optional[MinimalBalancedCatalog] = None,
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> TheoremBResult:
    """
    Find the first cell (canonical order) covering a member of BS(V).

    Args:
        point_set: V
        complex_: The labeled complex
        label_to_point: Label -> 0-based index into ``point_set``
        catalog: Precomputed BS(V); computed when omitted
        settings: Enumeration budget when the catalog is computed
        monitor: Optional metrics sink

    Returns:
        The witness, or a not-found result with a review note

    Raises:
        InputError: If a label has no point in V
    """
    _check_label_map(complex_, point_set, label_to_point)
    if catalog is None:
        catalog = enumerate_minimal_balanced(point_set, settings, monitor)
    members = [(member, frozenset(member)) for member in catalog.members]
    for cell in complex_.cells:
        covered = cell_points(complex_, cell, label_to_point)
        for member, as_set in members:
            if as_set <= covered:
                logger.debug("Cell %s covers balanced subset %s", cell, member)
                return TheoremBResult(True, cell, member)
    logger.warning(
        "No cell covers a minimal balanced subset of V; "
        "the boundary hypothesis may fail for this labeling"
    )
    return TheoremBResult(
        False, note="no cell covers a member of BS(V); review the boundary hypothesis"
    )


def standard_point_set(lemma: str, dim: int) -> Tuple[PointSet, Dict[int, int]]:
    """
    The point set V and label map under which a lemma follows from Theorem B.

    Sperner uses the simplex vertices, Tucker the cross polytope and Shashkin
    the signed simplex, each sized to a disc of dimension ``dim``.

    Raises:
        InputError: For Ky Fan, or a Shashkin disc too small for distinct points
    """
    if lemma == "sperner":
        return simplex_vertices(dim + 1), simplex_label_map(dim + 1)
    if lemma == "tucker":
        return cross_polytope(dim), signed_label_map(dim)
    if lemma == "shashkin":
        return signed_simplex(dim + 1), signed_label_map(dim + 1)
    raise InputError(f"No Theorem B point set is defined for {lemma!r}")
