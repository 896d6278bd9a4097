"""
Test suite for converting domain objects to and from documents.
"""

# pylint: disable=redefined-outer-name
from fractions import Fraction

import pytest

from src.balanced.enumerator import enumerate_minimal_balanced
from src.balanced.point_sets import cross_polytope
from src.core.checker import core_direct, core_via_theorem1
from src.core.game import Game
from src.documents import convert
from src.documents.store import dump_document, parse_document
from src.errors import InputError
from src.geometry.families import TwoSubsetFamily
from src.lemmas.complex import LabeledComplex
from src.lemmas.searchers import run_lemma
from src.lemmas.theorem_b import standard_point_set, theorem_b_witness
from src.lemmas.triangulations import path_1_disc, subdivided_simplex, symmetric_2_disc
from src.partitions.counter import PartitionTable, check_alternating_identity
from src.twosubsets.classifier import classify
from src.twosubsets.generator import generate_minimal_families
from src.twosubsets.verification import verify_theorem1


def reparse(document):
    """Dump and parse again, as a reader of the written file would."""
    return parse_document(dump_document(document))


@pytest.fixture
def triangle_game():
    """
    Fixture for the 3-player game with an empty core.
    """
    return Game.build(3, [0, 0, 0], {(1, 2): 1, (1, 3): 1, (2, 3): 1}, 1)


def test_point_set_document_round_trip():
    point_set = cross_polytope(2)

    data = reparse(convert.point_set_to_document(point_set))

    assert data["points"][2] == ["-1", "0"]
    assert convert.point_set_from_document(data) == point_set


@pytest.mark.parametrize(
    "points, message",
    [
        ([["0.5", "1"]], "Invalid rational"),
        ([[0.5, 1]], "Not a rational"),
        ([[1, 2], [3]], "dimension"),
        ([1, 2], "list of lists"),
        ([], "at least one point"),
    ],
)
def test_point_set_document_rejects(points, message):
    with pytest.raises(InputError, match=message):
        convert.point_set_from_document({"kind": "point_set", "points": points})


def test_point_set_document_requires_points():
    with pytest.raises(InputError, match="missing the 'points' key"):
        convert.point_set_from_document({"kind": "point_set"})


def test_two_subset_family_document():
    data = {"kind": "two_subset_family", "d": 3, "pairs": [[2, 1], [3, 2], [1, 3]]}

    family = convert.two_subset_family_from_document(data)

    assert family.pairs == ((1, 2), (1, 3), (2, 3))

    with pytest.raises(InputError, match="d must be an integer"):
        convert.two_subset_family_from_document({**data, "d": "3"})

    with pytest.raises(InputError, match="pair must be an integer"):
        convert.two_subset_family_from_document({**data, "pairs": [[1, True]]})


def test_game_document_defaults_and_round_trip(triangle_game):
    data = {
        "kind": "game",
        "d": 3,
        "singletons": ["0", "0", "0"],
        "grand": "1",
        "pairs": [{"pair": [1, 2], "value": "1"}],
    }

    game = convert.game_from_document(data)

    assert game.defaulted_pairs == ((1, 3), (2, 3))
    assert game.value((2, 3)) == 0

    again = convert.game_from_document(reparse(convert.game_to_document(triangle_game)))
    assert again == triangle_game


def test_game_document_rejects_repeated_pairs():
    data = {
        "kind": "game",
        "d": 2,
        "singletons": [0, 0],
        "grand": 0,
        "pairs": [{"pair": [1, 2], "value": 1}, {"pair": [1, 2], "value": 2}],
    }

    with pytest.raises(InputError, match="listed twice"):
        convert.game_from_document(data)

    with pytest.raises(InputError, match="missing the 'grand' key"):
        convert.game_from_document({"kind": "game", "d": 2, "singletons": [0, 0]})


def test_point_set_document_rejects_scalar_labels():
    data = {"kind": "point_set", "points": [["1", "0"]], "labels": 5}

    with pytest.raises(InputError, match="labels must be a list of strings"):
        convert.point_set_from_document(data)

    with pytest.raises(InputError, match="labels must be a list of strings"):
        convert.point_set_from_document({**data, "labels": [1]})


@pytest.mark.parametrize(
    "pairs, message",
    [
        (5, "pairs must be an array"),
        ({"pair": [1, 2], "value": 1}, "pairs must be an array"),
        ([1], "must be a table"),
    ],
)
def test_game_document_rejects_malformed_pairs(pairs, message):
    data = {"kind": "game", "d": 2, "singletons": [0, 0], "grand": 0, "pairs": pairs}

    with pytest.raises(InputError, match=message):
        convert.game_from_document(data)


def test_labeled_complex_document():
    triangulation = symmetric_2_disc(4)
    labels = {0: 1, 1: 2, 2: -1, 3: -2, 4: 3}

    data = reparse(convert.triangulation_to_document(triangulation, labels))
    complex_ = convert.labeled_complex_from_document(data)

    assert data["antipode"] == [[0, 2], [1, 3]]
    assert complex_.triangulation.antipode == triangulation.antipode
    assert complex_.labels == labels
    assert complex_.cells == triangulation.cells


def test_subdivision_document_keeps_carriers():
    triangulation = subdivided_simplex(2)
    labels = {0: 1, 1: 1, 2: 1, 3: 2, 4: 2, 5: 3}

    data = reparse(convert.triangulation_to_document(triangulation, labels))

    assert data["carriers"][1] == [1, 2]
    complex_ = convert.labeled_complex_from_document(data)
    assert complex_.triangulation.carriers == triangulation.carriers


def test_labeled_complex_document_errors():
    skeleton = reparse(convert.triangulation_to_document(path_1_disc(2)))

    with pytest.raises(InputError, match="has no labels"):
        convert.labeled_complex_from_document(skeleton)

    with pytest.raises(InputError, match="Got 2 labels for 3 vertices"):
        convert.labeled_complex_from_document({**skeleton, "labels": [1, -1]})

    with pytest.raises(InputError, match="antipode entries must be vertex pairs"):
        convert.labeled_complex_from_document(
            {**skeleton, "antipode": [[0, 1, 2]], "labels": [1, 2, -1]}
        )

    with pytest.raises(InputError, match="Declared boundary"):
        convert.labeled_complex_from_document(
            {**skeleton, "boundary": [0], "labels": [1, 2, -1]}
        )


def test_catalog_document_uses_one_based_indices():
    catalog = enumerate_minimal_balanced(cross_polytope(2))

    data = reparse(convert.catalog_to_document(catalog, oracle_agrees=True))

    assert data["kind"] == "catalog"
    assert data["count"] == 2
    assert data["subsets_examined"] == 14
    assert data["oracle_agrees"] is True
    assert [m["indices"] for m in data["members"]] == [[1, 3], [2, 4]]
    assert data["members"][0]["labels"] == ["+e1", "-e1"]
    assert data["members"][0]["weights"] == ["1/2", "1/2"]


def test_catalog_document_omits_oracle_by_default():
    catalog = enumerate_minimal_balanced(cross_polytope(1))

    assert "oracle_agrees" not in reparse(convert.catalog_to_document(catalog))


def test_verification_document():
    data = reparse(convert.verification_to_document(verify_theorem1(4)))

    assert data["equal"] is True
    assert data["generated_count"] == 3
    assert data["only_generated"] == []


def test_partition_table_document():
    table = PartitionTable.build(7)

    data = reparse(
        convert.partition_table_to_document(table, check_alternating_identity(7))
    )

    assert data["identity_holds"] is True
    row = data["rows"][7]
    assert (row["q"], row["b"], row["labeled"]) == ("5", "3", "717")
    assert row["alternating_sum"] == "3"
    assert all(r["identity"] for r in data["rows"])


def test_core_verdict_documents(triangle_game):
    verdict = core_via_theorem1(triangle_game)
    empty = reparse(convert.core_verdict_to_document(verdict, triangle_game))

    assert empty["nonempty"] is False
    assert empty["certificate_valid"] is True
    assert empty["families_checked"] == 5
    family = empty["violating_family"]
    assert family["value"] == "3/2"
    assert family["blocks"][0]["kind"] == "odd_cycle"
    assert family["blocks"][0]["weight"] == "1/2"

    rich = Game.build(3, [0, 0, 0], triangle_game.pair_values, 2)
    nonempty = reparse(convert.core_verdict_to_document(core_direct(rich), rich))
    assert nonempty["method"] == "direct"
    assert sum(Fraction(x) for x in nonempty["allocation"]) == 2
    assert "families_checked" not in nonempty


def test_cross_validation_document(triangle_game):
    data = reparse(
        convert.cross_validation_to_document(
            triangle_game,
            core_direct(triangle_game),
            core_via_theorem1(triangle_game),
        )
    )

    assert data["agree"] is True
    assert data["certificates_valid"] is True
    assert data["direct"]["nonempty"] is False
    assert data["theorem1"]["violating_family"]["singletons"] == []


def test_classification_documents():
    minimal = TwoSubsetFamily.of(5, [(1, 2), (3, 4), (4, 5), (3, 5)])
    data = reparse(convert.classification_to_document(minimal, classify(minimal)))

    assert data["minimal"] is True
    assert data["weights"] == ["1", "1/2", "1/2", "1/2"]
    assert [b["kind"] for b in data["blocks"]] == ["isolated_edge", "odd_cycle"]

    square = TwoSubsetFamily.of(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    data = reparse(convert.classification_to_document(square, classify(square)))

    assert data["minimal"] is False
    assert data["violation"] == "even_cycle"
    assert data["elements"] == [1, 2, 3, 4]


def test_family_stream_document():
    data = reparse(convert.family_stream_to_document(4, generate_minimal_families(4)))

    assert data["count"] == 3
    assert [[1, 2], [3, 4]] in data["families"]


def test_lemma_result_document():
    complex_ = LabeledComplex(symmetric_2_disc(4), {0: 1, 1: 2, 2: -1, 3: -2, 4: 1})
    point_set, label_map = standard_point_set("tucker", 2)
    witness = theorem_b_witness(point_set, complex_, label_map)

    result = run_lemma("tucker", complex_)
    data = reparse(convert.lemma_result_to_document(result, complex_, witness))

    assert data["lemma"] == "tucker"
    assert data["parity"] == "odd"
    assert data["witnesses"] == [[2, 4]]
    assert data["witness_labels"] == [[-1, 1]]
    assert data["theorem_b"] == {"found": True, "cell": [1, 2, 4], "member": [1, 3]}
