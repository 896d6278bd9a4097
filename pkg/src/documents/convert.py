"""
Conversions between domain objects and TOML documents.

Loaders take the plain dicts produced by ``store.read_document``; writers build
``tomlkit`` documents. Family elements and catalog point indices are 1-based;
rationals are "p/q" strings.
"""

import logging
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

import tomlkit
from tomlkit.items import Table
from tomlkit.toml_document import TOMLDocument

from src.balanced.enumerator import MinimalBalancedCatalog
from src.core.checker import CoalitionFamily, CoreVerdict, CrossValidationSummary
from src.core.game import Game
from src.documents.store import new_document, require
from src.errors import InputError
from src.geometry.families import TwoSubsetFamily
from src.geometry.rational import PointSet, format_rational
from src.lemmas.complex import DiscTriangulation, LabeledComplex, antipode_from_pairs
from src.lemmas.exhaustive import SuiteReport
from src.lemmas.searchers import LemmaResult
from src.lemmas.theorem_b import TheoremBResult
from src.partitions.counter import IdentityReport, PartitionTable
from src.twosubsets.classifier import (
    Classification,
    CycleDecomposition,
    DecompositionBlock,
)
from src.twosubsets.verification import VerificationReport

logger = logging.getLogger(__name__)


def _integer(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _integers(values: Any, what: str) -> List[int]:
    if not isinstance(values, list):
        raise InputError(f"{what} must be a list, got {values!r}")
    return [_integer(v, what) for v in values]


def _rows(values: Any, what: str) -> List[Any]:
    if not isinstance(values, list) or not all(isinstance(v, list) for v in values):
        raise InputError(f"{what} must be a list of lists")
    return values


def _rationals(values: Iterable) -> List[str]:
    return [format_rational(v) for v in values]


# -- input kinds ------------------------------------------------------------


def point_set_from_document(data: Mapping[str, Any]) -> PointSet:
    rows = _rows(require(data, "points", "point_set"), "points")
    labels = data.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)
    ):
        raise InputError("labels must be a list of strings")
    return PointSet.of(rows, labels)


def point_set_to_document(point_set: PointSet) -> TOMLDocument:
    document = new_document("point_set")
    document.add("points", [_rationals(p.coords) for p in point_set.points])
    if point_set.labels is not None:
        document.add("labels", list(point_set.labels))
    return document


def two_subset_family_from_document(data: Mapping[str, Any]) -> TwoSubsetFamily:
    d = _integer(require(data, "d", "two_subset_family"), "d")
    pairs = [
        _integers(p, "pair")
        for p in _rows(require(data, "pairs", "two_subset_family"), "pairs")
    ]
    return TwoSubsetFamily.of(d, pairs)


def game_from_document(data: Mapping[str, Any]) -> Game:
    """
    Read a game; pairs not listed default to the sum of their singleton values.

    Raises:
        InputError: On missing keys, malformed values, or a pair listed twice
    """
    d = _integer(require(data, "d", "game"), "d")
    singletons = require(data, "singletons", "game")
    if not isinstance(singletons, list):
        raise InputError("singletons must be a list")
    entries = data.get("pairs", [])
    if not isinstance(entries, list):
        raise InputError("pairs must be an array of [[pairs]] tables")
    values: Dict[tuple, Any] = {}
    for entry in entries:
        if not isinstance(entry, dict):
            raise InputError("each [[pairs]] entry must be a table")
        pair = tuple(_integers(require(entry, "pair", "game"), "pair"))
        if pair in values:
            raise InputError(f"Pair {list(pair)} is listed twice")
        values[pair] = require(entry, "value", "game")
    return Game.build(d, singletons, values, require(data, "grand", "game"))


def game_to_document(game: Game) -> TOMLDocument:
    document = new_document("game")
    document.add("d", game.d)
    document.add("singletons", _rationals(game.singleton_values))
    document.add("grand", format_rational(game.grand_value))
    pairs = tomlkit.aot()
    for (i, j), value in game.pair_values.items():
        entry = tomlkit.table()
        entry.add("pair", [i, j])
        entry.add("value", format_rational(value))
        pairs.append(entry)
    document.add("pairs", pairs)
    return document


def triangulation_from_document(data: Mapping[str, Any]) -> DiscTriangulation:
    kind = "labeled_complex"
    vertices = _integers(require(data, "vertices", kind), "vertices")
    rows = _rows(require(data, "cells", kind), "cells")
    cells = [tuple(_integers(c, "cell")) for c in rows]
    antipode = None
    if "antipode" in data:
        rows = _rows(data["antipode"], "antipode")
        pairs = [_integers(p, "antipode pair") for p in rows]
        if any(len(p) != 2 for p in pairs):
            raise InputError("antipode entries must be vertex pairs")
        antipode = antipode_from_pairs(pairs)
    carriers = None
    if "carriers" in data:
        rows = _rows(data["carriers"], "carriers")
        if len(rows) != len(vertices):
            raise InputError("carriers must list one face per vertex")
        carriers = {
            v: frozenset(_integers(row, "carrier")) for v, row in zip(vertices, rows)
        }
    boundary = _integers(require(data, "boundary", kind), "boundary")
    return DiscTriangulation(
        dim=_integer(require(data, "dim", kind), "dim"),
        vertices=tuple(vertices),
        cells=tuple(cells),
        boundary_vertices=frozenset(boundary),
        antipode=antipode,
        carriers=carriers,
    )


def labeled_complex_from_document(data: Mapping[str, Any]) -> LabeledComplex:
    """
    Read a complex with one label per vertex, listed in vertex order.

    Raises:
        InputError: On an invalid complex or a label count mismatch
    """
    triangulation = triangulation_from_document(data)
    if "labels" not in data:
        raise InputError("labeled_complex document has no labels")
    labels = _integers(data["labels"], "labels")
    if len(labels) != len(triangulation.vertices):
        raise InputError(
            f"Got {len(labels)} labels for {len(triangulation.vertices)} vertices"
        )
    return LabeledComplex(triangulation, dict(zip(triangulation.vertices, labels)))


def triangulation_to_document(
    triangulation: DiscTriangulation, labels: Optional[Mapping[int, int]] = None
) -> TOMLDocument:
    """A labeled_complex document; without labels it is a skeleton to fill in."""
    document = new_document("labeled_complex")
    document.add("dim", triangulation.dim)
    document.add("vertices", list(triangulation.vertices))
    document.add("cells", [list(c) for c in triangulation.cells])
    document.add("boundary", sorted(triangulation.boundary_vertices))
    antipode = triangulation.antipode
    if antipode is not None:
        representatives = triangulation.boundary_representatives
        document.add("antipode", [[v, antipode[v]] for v in representatives])
    if triangulation.carriers is not None:
        document.add(
            "carriers",
            [sorted(triangulation.carriers[v]) for v in triangulation.vertices],
        )
    if labels is not None:
        document.add("labels", [labels[v] for v in triangulation.vertices])
    return document


# -- output kinds -----------------------------------------------------------


def catalog_to_document(
    catalog: MinimalBalancedCatalog, oracle_agrees: Optional[bool] = None
) -> TOMLDocument:
    point_set = catalog.point_set
    document = new_document("catalog")
    document.add("points", len(point_set))
    document.add("dimension", point_set.dimension)
    document.add("count", len(catalog))
    document.add("subsets_examined", catalog.subsets_examined)
    if oracle_agrees is not None:
        document.add("oracle_agrees", oracle_agrees)
    members = tomlkit.aot()
    for member, witness in zip(catalog.members, catalog.witnesses):
        entry = tomlkit.table()
        entry.add("indices", [i + 1 for i in member])
        entry.add("labels", [point_set.label(i) for i in member])
        entry.add("weights", _rationals(witness.weights))
        members.append(entry)
    document.add("members", members)
    return document


def verification_to_document(report: VerificationReport) -> TOMLDocument:
    document = new_document("theorem1_verification")
    document.add("d", report.d)
    document.add("equal", report.equal)
    document.add("generated_count", report.generated_count)
    document.add("geometric_count", report.geometric_count)
    document.add("subsets_examined", report.subsets_examined)
    for key in ("only_generated", "only_geometric"):
        families = getattr(report, key)
        document.add(key, [[list(p) for p in f] for f in families])
    return document


def partition_table_to_document(
    table: PartitionTable, identity: IdentityReport
) -> TOMLDocument:
    """Labelled counts are written as decimal strings; they outgrow 64-bit integers."""
    document = new_document("partition_table")
    document.add("max_d", table.max_d)
    document.add("identity_holds", identity.holds)
    failing = {f[0] for f in identity.identity_failures}
    failing |= {f[0] for f in identity.series_failures}
    rows = tomlkit.aot()
    for d in range(table.max_d + 1):
        row = tomlkit.table()
        row.add("d", d)
        row.add("q", str(table.q[d]))
        row.add("b", str(table.b[d]))
        row.add("alternating_sum", str(table.alternating_sum(d)))
        row.add("labeled", str(table.labeled[d]))
        row.add("identity", d not in failing)
        rows.append(row)
    document.add("rows", rows)
    return document


def _block_table(block: DecompositionBlock) -> Table:
    table = tomlkit.table()
    table.add("kind", block.kind.value)
    table.add("order", list(block.order))
    table.add("weight", format_rational(block.edge_weight))
    return table


def _coalition_family_table(family: CoalitionFamily, game: Game) -> Table:
    table = tomlkit.table()
    table.add("singletons", list(family.singletons))
    table.add("value", format_rational(family.value(game)))
    blocks = tomlkit.aot()
    for block in family.blocks:
        blocks.append(_block_table(block))
    table.add("blocks", blocks)
    return table


def _add_verdict(
    table: Union[Table, TOMLDocument], verdict: CoreVerdict, game: Game
) -> Union[Table, TOMLDocument]:
    table.add("method", verdict.method)
    table.add("nonempty", verdict.nonempty)
    table.add("certificate_valid", verdict.verify(game))
    if verdict.method == "theorem1":
        table.add("families_checked", verdict.families_checked)
    if verdict.allocation is not None:
        table.add("allocation", _rationals(verdict.allocation))
    if verdict.violating_family is not None:
        table.add(
            "violating_family", _coalition_family_table(verdict.violating_family, game)
        )
    return table


def core_verdict_to_document(verdict: CoreVerdict, game: Game) -> TOMLDocument:
    document = new_document("core_verdict")
    document.add("d", game.d)
    document.add("grand", format_rational(game.grand_value))
    return _add_verdict(document, verdict, game)


def cross_validation_to_document(
    game: Game, direct: CoreVerdict, theorem1: CoreVerdict
) -> TOMLDocument:
    """Both verdicts side by side; also written when the checkers disagree."""
    document = new_document("core_cross_validation")
    document.add("d", game.d)
    document.add("agree", direct.nonempty == theorem1.nonempty)
    document.add("certificates_valid", direct.verify(game) and theorem1.verify(game))
    document.add("direct", _add_verdict(tomlkit.table(), direct, game))
    document.add("theorem1", _add_verdict(tomlkit.table(), theorem1, game))
    return document


def cross_validation_summary_to_document(
    summary: CrossValidationSummary, seed: int, min_d: int, max_d: int
) -> TOMLDocument:
    document = new_document("core_cross_validation_summary")
    document.add("seed", seed)
    document.add("min_d", min_d)
    document.add("max_d", max_d)
    document.add("games", summary.games)
    document.add("nonempty", summary.nonempty)
    document.add("empty", summary.empty)
    document.add("invalid_certificates", summary.invalid_certificates)
    document.add("passed", summary.passed)
    return document


def classification_to_document(
    family: TwoSubsetFamily, classification: Classification
) -> TOMLDocument:
    document = new_document("classification")
    document.add("d", family.d)
    document.add("pairs", [list(p) for p in family.pairs])
    if isinstance(classification, CycleDecomposition):
        document.add("minimal", True)
        weights = classification.weights()
        document.add("weights", _rationals(weights[p] for p in family.pairs))
        blocks = tomlkit.aot()
        for block in classification.blocks:
            blocks.append(_block_table(block))
        document.add("blocks", blocks)
    else:
        document.add("minimal", False)
        document.add("violation", classification.violation.value)
        document.add("detail", classification.detail)
        document.add("elements", list(classification.elements))
    return document


def family_stream_to_document(
    d: int, families: Iterable[TwoSubsetFamily]
) -> TOMLDocument:
    rendered = [[list(p) for p in family.pairs] for family in families]
    document = new_document("family_stream")
    document.add("d", d)
    document.add("count", len(rendered))
    document.add("families", rendered)
    return document


def lemma_result_to_document(
    result: LemmaResult,
    complex_: LabeledComplex,
    theorem_b: Optional[TheoremBResult] = None,
) -> TOMLDocument:
    document = new_document("lemma_result")
    document.add("lemma", result.lemma)
    document.add("count", result.count)
    document.add("parity", "odd" if result.is_odd else "even")
    document.add("witnesses", [list(w) for w in result.witnesses])
    document.add(
        "witness_labels", [list(complex_.cell_labels(w)) for w in result.witnesses]
    )
    if theorem_b is not None:
        table = tomlkit.table()
        table.add("found", theorem_b.found)
        if theorem_b.found:
            table.add("cell", list(theorem_b.cell))
            table.add("member", [i + 1 for i in theorem_b.member])
        else:
            table.add("note", theorem_b.note)
        document.add("theorem_b", table)
    return document


def suite_reports_to_document(reports: Sequence[SuiteReport]) -> TOMLDocument:
    document = new_document("lemma_suite")
    document.add("passed", all(r.passed for r in reports))
    entries = tomlkit.aot()
    for report in reports:
        entry = tomlkit.table()
        entry.add("lemma", report.lemma)
        entry.add("instance", report.instance)
        entry.add("labelings_checked", report.labelings_checked)
        entry.add("hypothesis_holding", report.hypothesis_holding)
        entry.add("vacuous", report.vacuous)
        entry.add("claim_failures", report.claim_failures)
        entry.add("theorem_b_checked", report.theorem_b_checked)
        entry.add("theorem_b_failures", report.theorem_b_failures)
        entries.append(entry)
    document.add("reports", entries)
    return document
