"""
Exhaustive lemma suites: every admissible labeling of small fixed triangulations,
with parity and existence claims checked and Theorem B witnesses sought.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.balanced.enumerator import enumerate_minimal_balanced
from src.config import Settings
from src.errors import BudgetExceededError
from src.lemmas.complex import DiscTriangulation, LabeledComplex, SignedLabelSet
from src.lemmas.searchers import (
    LEMMAS,
    find_alternating_simplices,
    find_complementary_edges,
    find_rainbow_cells,
    find_shashkin_cells,
)
from src.lemmas.theorem_b import standard_point_set, theorem_b_witness
from src.lemmas.triangulations import path_1_disc, subdivided_simplex, symmetric_2_disc
from src.monitors.search_monitor import SearchMonitor

STANDARD_SUBDIVISIONS = (1, 2, 3)
STANDARD_POLYGONS = (4, 6, 8)
STANDARD_INTERIORS = (0, 1, 2)
# the interior-0 fan has an edge between antipodes, so no labeling avoids
# complementary edges
HYPOTHESIS_INTERIORS = (1, 2)
# a 1-edge path joins its antipodes directly
STANDARD_PATHS = (2, 3, 4, 5, 6)
KY_FAN_PALETTE = 3


@dataclass
class SuiteReport:
    """Tallies of one exhaustive run over a single triangulation."""

    lemma: str
    instance: str
    labelings_checked: int = 0
    hypothesis_holding: int = 0
    claim_failures: int = 0
    theorem_b_checked: int = 0
    theorem_b_failures: int = 0

    @property
    def passed(self) -> bool:
        return self.claim_failures == 0 and self.theorem_b_failures == 0

    @property
    def vacuous(self) -> bool:
        """True when labelings were checked but none met the hypothesis."""
        return self.labelings_checked > 0 and self.hypothesis_holding == 0


def disc_interiors(lemma: str) -> Tuple[int, ...]:
    """Interior choices for the symmetric 2-disc instances of a lemma."""
    return STANDARD_INTERIORS if lemma == "tucker" else HYPOTHESIS_INTERIORS


def full_signed_sets(d: int) -> List[SignedLabelSet]:
    """One representative of each {Lambda, -Lambda} pair, the one holding +1."""
    sets = []
    for signs in product((1, -1), repeat=d - 1):
        labels = [1] + [sign * k for sign, k in zip(signs, range(2, d + 1))]
        sets.append(SignedLabelSet(frozenset(labels)))
    return sets


class LemmaSuite:
    """
    Runs the exhaustive lemma checks and collects one report per instance.
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        monitor: Optional[SearchMonitor] = None,
    ):
        """
        Args:
            settings: Labeling and enumeration budgets
            monitor: Optional metrics sink for labelings checked
        """
        self.settings = settings or Settings()
        self.monitor = monitor
        self.reports: List[SuiteReport] = []
        self.logger = logging.getLogger(__name__)

    def _require_budget(self, instance: str, total: int) -> None:
        if total > self.settings.labeling_budget:
            self.logger.error("%s needs %d labelings", instance, total)
            raise BudgetExceededError(
                f"labeling budget exceeded for {instance}",
                0,
                self.settings.labeling_budget,
                partial=self.reports,
            )

    def admissible_labelings(
        self, triangulation: DiscTriangulation, instance: str
    ) -> Iterator[Dict[int, int]]:
        """Every Sperner-admissible labeling: each vertex takes a carrier label."""
        choices = [sorted(triangulation.carriers[v]) for v in triangulation.vertices]
        self._require_budget(instance, prod(len(c) for c in choices))
        return (
            dict(zip(triangulation.vertices, labels)) for labels in product(*choices)
        )

    def antipodal_labelings(
        self, triangulation: DiscTriangulation, palette: int, instance: str
    ) -> Iterator[Dict[int, int]]:
        """
        Every labeling by +-1..+-palette that negates under the antipode.

        Free vertices are the boundary representatives and the interior vertices.
        """
        free = triangulation.boundary_representatives + triangulation.interior_vertices
        signed = [s * k for k in range(1, palette + 1) for s in (1, -1)]
        self._require_budget(instance, len(signed) ** len(free))
        antipode = triangulation.antipode

        def extend(values: Sequence[int]) -> Dict[int, int]:
            labels = dict(zip(free, values))
            for vertex in triangulation.boundary_representatives:
                labels[antipode[vertex]] = -labels[vertex]
            return labels

        return (extend(values) for values in product(signed, repeat=len(free)))

    def _count(self, report: SuiteReport) -> None:
        report.labelings_checked += 1
        if self.monitor is not None:
            self.monitor.record_labelings()

    def _finish(self, report: SuiteReport) -> SuiteReport:
        self.reports.append(report)
        log = self.logger.info if report.passed else self.logger.warning
        log(
            "%s on %s: %d labelings, %d meet the hypothesis, %d claim failures, "
            "%d Theorem B failures",
            report.lemma,
            report.instance,
            report.labelings_checked,
            report.hypothesis_holding,
            report.claim_failures,
            report.theorem_b_failures,
        )
        if report.vacuous:
            self.logger.warning(
                "%s on %s: no labeling meets the hypothesis",
                report.lemma,
                report.instance,
            )
        return report

    def sperner(self, k: int, dim: int = 2) -> SuiteReport:
        """Odd rainbow count for every admissible labeling of the k-fold subdivision."""
        triangulation = subdivided_simplex(k, dim)
        report = SuiteReport("sperner", f"subdivided-simplex({k}), dim {dim}")
        point_set, label_map = standard_point_set("sperner", dim)
        catalog = enumerate_minimal_balanced(point_set, self.settings, self.monitor)
        for labels in self.admissible_labelings(triangulation, report.instance):
            self._count(report)
            complex_ = LabeledComplex(triangulation, labels)
            report.hypothesis_holding += 1
            if not find_rainbow_cells(complex_).is_odd:
                report.claim_failures += 1
            report.theorem_b_checked += 1
            witness = theorem_b_witness(point_set, complex_, label_map, catalog)
            report.theorem_b_failures += not witness.found
        return self._finish(report)

    def tucker(self, n: int, interior: int) -> SuiteReport:
        """A complementary edge for every antipodal +-1, +-2 labeling of the 2-disc."""
        triangulation = symmetric_2_disc(n, interior)
        report = SuiteReport("tucker", f"symmetric-2-disc({n}), {interior} interior")
        point_set, label_map = standard_point_set("tucker", 2)
        catalog = enumerate_minimal_balanced(point_set, self.settings, self.monitor)
        for labels in self.antipodal_labelings(triangulation, 2, report.instance):
            self._count(report)
            complex_ = LabeledComplex(triangulation, labels)
            report.hypothesis_holding += 1
            if not find_complementary_edges(complex_).witnesses:
                report.claim_failures += 1
            report.theorem_b_checked += 1
            witness = theorem_b_witness(point_set, complex_, label_map, catalog)
            report.theorem_b_failures += not witness.found
        return self._finish(report)

    def kyfan(
        self, n: int, interior: int, palette: int = KY_FAN_PALETTE
    ) -> SuiteReport:
        """Odd alternating count for antipodal labelings without complementary edges."""
        triangulation = symmetric_2_disc(n, interior)
        report = SuiteReport(
            "kyfan", f"symmetric-2-disc({n}), {interior} interior, palette {palette}"
        )
        for labels in self.antipodal_labelings(triangulation, palette, report.instance):
            self._count(report)
            complex_ = LabeledComplex(triangulation, labels)
            if find_complementary_edges(complex_).witnesses:
                continue
            report.hypothesis_holding += 1
            if not find_alternating_simplices(complex_, palette).is_odd:
                report.claim_failures += 1
        return self._finish(report)

    def shashkin(self, triangulation: DiscTriangulation, instance: str) -> SuiteReport:
        """
        Odd Lambda/-Lambda count for every full signed set, over antipodal
        labelings by +-1..+-d without complementary edges (d = dim + 1).

        Theorem B is checked against the signed simplex when d >= 3; for d = 2
        its points coincide in antipodal pairs.
        """
        d = triangulation.dim + 1
        report = SuiteReport("shashkin", instance)
        lambda_sets = full_signed_sets(d)
        point_set = label_map = catalog = None
        if d >= 3:
            point_set, label_map = standard_point_set("shashkin", triangulation.dim)
            catalog = enumerate_minimal_balanced(point_set, self.settings, self.monitor)
        for labels in self.antipodal_labelings(triangulation, d, instance):
            self._count(report)
            complex_ = LabeledComplex(triangulation, labels)
            if find_complementary_edges(complex_).witnesses:
                continue
            report.hypothesis_holding += 1
            for lambda_set in lambda_sets:
                if not find_shashkin_cells(complex_, lambda_set).is_odd:
                    report.claim_failures += 1
            if catalog is not None:
                report.theorem_b_checked += 1
                witness = theorem_b_witness(point_set, complex_, label_map, catalog)
                report.theorem_b_failures += not witness.found
        return self._finish(report)

    def run(self, lemmas: Sequence[str] = LEMMAS) -> List[SuiteReport]:
        """Run the standard instances for the chosen lemmas; returns all reports."""
        if "sperner" in lemmas:
            for k in STANDARD_SUBDIVISIONS:
                self.sperner(k)
        if "tucker" in lemmas:
            for n, interior in product(STANDARD_POLYGONS, disc_interiors("tucker")):
                self.tucker(n, interior)
        if "kyfan" in lemmas:
            for n, interior in product(STANDARD_POLYGONS, disc_interiors("kyfan")):
                self.kyfan(n, interior)
        if "shashkin" in lemmas:
            for m in STANDARD_PATHS:
                self.shashkin(path_1_disc(m), f"path-1-disc({m})")
            for n, interior in product(
                STANDARD_POLYGONS[:2], disc_interiors("shashkin")
            ):
                self.shashkin(
                    symmetric_2_disc(n, interior),
                    f"symmetric-2-disc({n}), {interior} interior",
                )
        return self.reports
