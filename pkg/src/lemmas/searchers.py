"""
Searches over labeled disc triangulations: rainbow cells, complementary edges,
alternating cells and Shashkin cells, plus the boundary conditions they assume.
"""

import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Tuple

from src.errors import HypothesisError, InputError
from src.lemmas.complex import Cell, LabeledComplex, SignedLabelSet

logger = logging.getLogger(__name__)

LEMMAS = ("sperner", "tucker", "kyfan", "shashkin")


@dataclass(frozen=True)
class LemmaResult:
    """Witness cells (or edges) found by one search, in canonical order."""

    lemma: str
    witnesses: Tuple[Cell, ...]

    @property
    def count(self) -> int:
        return len(self.witnesses)

    @property
    def is_odd(self) -> bool:
        return self.count % 2 == 1


def check_sperner_admissible(
    complex_: LabeledComplex,
    carriers: Optional[Mapping[int, frozenset]] = None,
) -> bool:
    """
    True iff every vertex is labeled by a vertex of its carrier face.

    Args:
        complex_: A labeled subdivision of the standard dim-simplex
        carriers: Carrier face per vertex; defaults to the triangulation's own

    Raises:
        InputError: Without carriers, or on a label outside 1..dim+1
    """
    carriers = carriers if carriers is not None else complex_.triangulation.carriers
    if carriers is None:
        raise InputError("Sperner admissibility needs the carrier face of every vertex")
    top = complex_.dim + 1
    for vertex, label in complex_.labels.items():
        if not 1 <= label <= top:
            raise InputError(f"Vertex {vertex} has label {label}, outside 1..{top}")
    labels = complex_.labels
    return all(labels[v] in carriers[v] for v in complex_.triangulation.vertices)


def find_rainbow_cells(complex_: LabeledComplex) -> LemmaResult:
    """Cells whose dim+1 vertices carry dim+1 distinct labels."""
    witnesses = tuple(
        cell
        for cell in complex_.cells
        if len(set(complex_.cell_labels(cell))) == complex_.dim + 1
    )
    return LemmaResult("sperner", witnesses)


def check_antipodal_labeling(complex_: LabeledComplex) -> bool:
    """
    True iff L(-v) = -L(v) on the boundary.

    Raises:
        InputError: If the triangulation has no antipode
    """
    antipode = complex_.triangulation.antipode
    if antipode is None:
        raise InputError("The complex has no antipodal involution on its boundary")
    complex_.require_signed()
    return all(complex_.labels[w] == -complex_.labels[v] for v, w in antipode.items())


def find_complementary_edges(complex_: LabeledComplex) -> LemmaResult:
    """Edges whose endpoint labels are exact negatives."""
    complex_.require_signed()
    labels = complex_.labels
    witnesses = tuple(
        edge
        for edge in complex_.triangulation.edges
        if labels[edge[0]] == -labels[edge[1]]
    )
    return LemmaResult("tucker", witnesses)


def _require_no_complementary_edge(complex_: LabeledComplex) -> None:
    edges = find_complementary_edges(complex_).witnesses
    if edges:
        u, v = edges[0]
        raise HypothesisError(
            "no complementary edge",
            f"edge ({u}, {v}) has labels {complex_.labels[u]} and {complex_.labels[v]}",
        )


def is_alternating(labels: Tuple[int, ...]) -> bool:
    """
    Sorted by magnitude, magnitudes strictly increase and signs strictly alternate.

    Both sign patterns (+, -, +, ...) and (-, +, -, ...) qualify.
    """
    ordered = sorted(labels, key=abs)
    for a, b in zip(ordered, ordered[1:]):
        if abs(a) == abs(b) or (a > 0) == (b > 0):
            return False
    return True


def find_alternating_simplices(complex_: LabeledComplex, palette: int) -> LemmaResult:
    """
    Cells whose labels alternate in sign along increasing magnitude.

    Args:
        complex_: Signed labeling with magnitudes at most ``palette``
        palette: Largest admissible label magnitude

    Raises:
        InputError: On a zero label or a magnitude above ``palette``
        HypothesisError: If a complementary edge exists
    """
    complex_.require_signed(palette)
    _require_no_complementary_edge(complex_)
    witnesses = tuple(
        cell for cell in complex_.cells if is_alternating(complex_.cell_labels(cell))
    )
    return LemmaResult("kyfan", witnesses)


def find_shashkin_cells(
    complex_: LabeledComplex, lambda_set: SignedLabelSet
) -> LemmaResult:
    """
    Cells labeled exactly by ``lambda_set`` or by its negation.

    The disc has dimension d - 1, labels lie in +-1..+-d and ``lambda_set``
    holds one label of each magnitude 1..d.

    Raises:
        InputError: If ``lambda_set`` is not full or a label is out of range
        HypothesisError: If a complementary edge exists
    """
    d = complex_.dim + 1
    lambda_set.require_full(d)
    complex_.require_signed(d)
    _require_no_complementary_edge(complex_)
    targets = (lambda_set.labels, lambda_set.negated().labels)
    witnesses = tuple(
        cell
        for cell in complex_.cells
        if frozenset(complex_.cell_labels(cell)) in targets
    )
    return LemmaResult("shashkin", witnesses)


def run_lemma(
    lemma: str,
    complex_: LabeledComplex,
    palette: Optional[int] = None,
    lambda_set: Optional[SignedLabelSet] = None,
) -> LemmaResult:
    """
    Check the lemma's boundary hypothesis, then search for its witnesses.

    Sperner needs an admissible labeling; Tucker an antipodal labeling with
    magnitudes at most dim; Ky Fan and Shashkin an antipodal labeling and no
    complementary edge.

    Raises:
        HypothesisError: Naming the violated check
        InputError: On malformed labels or an unknown lemma
    """
    if lemma == "sperner":
        if not check_sperner_admissible(complex_):
            raise HypothesisError(
                "sperner admissible", "a vertex label is outside its carrier"
            )
        result = find_rainbow_cells(complex_)
    elif lemma == "tucker":
        _require_antipodal(complex_)
        complex_.require_signed(complex_.dim)
        result = find_complementary_edges(complex_)
    elif lemma == "kyfan":
        _require_antipodal(complex_)
        palette = palette or max(abs(label) for label in complex_.labels.values())
        result = find_alternating_simplices(complex_, palette)
    elif lemma == "shashkin":
        if lambda_set is None:
            raise InputError("Shashkin's search needs a label set")
        _require_antipodal(complex_)
        result = find_shashkin_cells(complex_, lambda_set)
    else:
        raise InputError(f"Unknown lemma {lemma!r}; expected one of {LEMMAS}")
    parity = "odd" if result.is_odd else "even"
    logger.info("%s: %d witnesses (%s)", lemma, result.count, parity)
    return result


def _require_antipodal(complex_: LabeledComplex) -> None:
    if complex_.triangulation.antipode is None:
        raise HypothesisError("antipodal boundary", "the complex has no antipode")
    if not check_antipodal_labeling(complex_):
        raise HypothesisError("antipodal boundary", "some L(-v) differs from -L(v)")
