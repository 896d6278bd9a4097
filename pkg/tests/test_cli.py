"""
Test suite for the balanced-sets command-line interface.
"""

# pylint: disable=redefined-outer-name
import pytest
from click.testing import CliRunner

from src.cli import cli
from src.core.checker import CoreVerdict
from src.core.game import Game, additive_game
from src.documents import convert
from src.documents.store import parse_document, write_document
from src.lemmas.triangulations import subdivided_simplex, symmetric_2_disc

TRIANGLE_FAMILY = """\
kind = "two_subset_family"
d = 3
pairs = [[1, 2], [2, 3], [1, 3]]
"""

SQUARE_FAMILY = """\
kind = "two_subset_family"
d = 4
pairs = [[1, 2], [2, 3], [3, 4], [1, 4]]
"""


@pytest.fixture
def runner():
    """
    Fixture for a CliRunner that keeps stderr apart from the documents on stdout.
    """
    return CliRunner(mix_stderr=False)


@pytest.fixture
def invoke(runner):
    """
    Fixture returning a helper that runs the CLI with stringified arguments.
    """

    def run(*args, **kwargs):
        return runner.invoke(cli, [str(a) for a in args], **kwargs)

    return run


@pytest.fixture
def square_points(invoke, tmp_path):
    """
    Fixture writing the cross polytope of R^2 as a point_set document.
    """
    result = invoke("point-set", "cross-polytope", "--d", 2)
    path = tmp_path / "square.toml"
    path.write_text(result.stdout, encoding="utf-8")
    return path


@pytest.fixture
def triangle_game_file(tmp_path):
    """
    Fixture for a game whose pairs outvalue the grand coalition.
    """
    game = Game.build(3, [0, 0, 0], {(1, 2): 1, (1, 3): 1, (2, 3): 1}, 1)
    path = tmp_path / "triangle_game.toml"
    write_document(convert.game_to_document(game), path)
    return path


def write_complex(tmp_path, triangulation, labels, name="complex.toml"):
    path = tmp_path / name
    write_document(convert.triangulation_to_document(triangulation, labels), path)
    return path


def test_bs_on_the_square(invoke, square_points):
    result = invoke("bs", square_points)

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["kind"] == "catalog"
    assert data["count"] == 2
    assert [m["indices"] for m in data["members"]] == [[1, 3], [2, 4]]


def test_bs_with_oracle(invoke, square_points):
    result = invoke("bs", square_points, "--oracle")

    assert result.exit_code == 0
    assert parse_document(result.stdout)["oracle_agrees"] is True


def test_bs_on_midpoints(invoke, tmp_path):
    path = tmp_path / "v4.toml"
    path.write_text(invoke("point-set", "midpoints", "--d", 4).stdout, encoding="utf-8")

    result = invoke("bs", path)

    assert result.exit_code == 0
    assert parse_document(result.stdout)["count"] == 3


def test_bs_single_point(invoke, tmp_path):
    path = tmp_path / "one.toml"
    path.write_text('kind = "point_set"\npoints = [["3", "-1/2"]]\n', encoding="utf-8")

    result = invoke("bs", path)

    assert result.exit_code == 0
    assert parse_document(result.stdout)["members"][0]["indices"] == [1]


@pytest.mark.parametrize(
    "content",
    [
        'kind = "point_set"\npoints = [["0.5", "1"]]\n',
        'kind = "point_set"\npoints = [["1", "0"], ["1", "0"]]\n',
        'kind = "point_set"\npoints = [["1", "0"]]\nlabels = 5\n',
        'kind = "game"\nd = 2\n',
        "points = [",
    ],
)
def test_bs_rejects_bad_documents(invoke, tmp_path, content):
    path = tmp_path / "bad.toml"
    path.write_text(content, encoding="utf-8")

    result = invoke("bs", path)

    assert result.exit_code == 2
    assert "Input error" in result.stderr
    assert result.stdout == ""


def test_bs_missing_file(invoke, tmp_path):
    result = invoke("bs", tmp_path / "nowhere.toml")

    assert result.exit_code == 2
    assert "Cannot read" in result.stderr


def test_bs_budget_from_environment(invoke, square_points):
    result = invoke("bs", square_points, env={"BALANCED_ENUMERATION_BUDGET": "3"})

    assert result.exit_code == 3
    assert "Budget exceeded" in result.stderr


def test_invalid_environment_override(invoke, square_points):
    result = invoke("bs", square_points, env={"BALANCED_ENUMERATION_BUDGET": "lots"})

    assert result.exit_code == 2
    assert "must be an integer" in result.stderr


def test_point_set_kind_errors(invoke):
    assert invoke("point-set", "signed-simplex", "--d", 2).exit_code == 2
    assert invoke("point-set", "hypercube", "--d", 2).exit_code == 2


@pytest.mark.parametrize("d, expected", [(2, 1), (4, 3), (5, 22)])
def test_verify_theorem1(invoke, d, expected):
    result = invoke("verify-theorem1", "--d", d)

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["equal"] is True
    assert data["generated_count"] == expected


@pytest.mark.parametrize("d, code", [(1, 2), (9, 3)])
def test_verify_theorem1_bounds(invoke, d, code):
    assert invoke("verify-theorem1", "--d", d).exit_code == code


def test_partitions(invoke):
    result = invoke("partitions", "--max-d", 7)

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["identity_holds"] is True
    rows = data["rows"]
    assert [row["q"] for row in rows] == ["1", "1", "1", "2", "2", "3", "4", "5"]
    assert [row["b"] for row in rows] == ["1", "0", "1", "1", "1", "2", "2", "3"]
    assert data["rows"][7]["labeled"] == "717"


def test_partitions_edges(invoke):
    zero = parse_document(invoke("partitions", "--max-d", 0).stdout)

    assert zero["rows"] == [
        {
            "d": 0,
            "q": "1",
            "b": "1",
            "alternating_sum": "1",
            "labeled": "1",
            "identity": True,
        }
    ]
    assert invoke("partitions", "--max-d", -1).exit_code == 2
    assert parse_document(invoke("partitions", "--max-d", 200).stdout)["identity_holds"]


def test_core_empty(invoke, triangle_game_file):
    result = invoke("core", triangle_game_file)

    assert result.exit_code == 1
    data = parse_document(result.stdout)
    assert data["kind"] == "core_cross_validation"
    assert data["agree"] is True
    assert data["theorem1"]["violating_family"]["value"] == "3/2"


@pytest.mark.parametrize(
    "method, kind", [("direct", "core_verdict"), ("theorem1", "core_verdict")]
)
def test_core_single_method(invoke, triangle_game_file, method, kind):
    result = invoke("core", triangle_game_file, "--method", method)

    assert result.exit_code == 1
    data = parse_document(result.stdout)
    assert data["kind"] == kind
    assert data["method"] == method


def test_core_nonempty(invoke, tmp_path):
    path = tmp_path / "additive.toml"
    write_document(convert.game_to_document(additive_game([1, 2, 3])), path)

    result = invoke("core", path, "--method", "direct")

    assert result.exit_code == 0
    assert parse_document(result.stdout)["allocation"] == ["1", "2", "3"]


@pytest.mark.parametrize(
    "content",
    [
        'kind = "game"\nd = 2\nsingletons = ["0", "0"]\ngrand = "1"\npairs = 5\n',
        'kind = "game"\nd = 2\nsingletons = ["0", "0"]\ngrand = "1"\npairs = [1]\n',
        'kind = "game"\nd = 2\nsingletons = "0"\ngrand = "1"\n',
        'kind = "game"\nd = 2\nsingletons = ["0", "0"]\n',
    ],
)
@pytest.mark.parametrize("method", ["direct", "theorem1", "both"])
def test_core_rejects_bad_documents(invoke, tmp_path, content, method):
    path = tmp_path / "bad_game.toml"
    path.write_text(content, encoding="utf-8")

    result = invoke("core", path, "--method", method)

    assert result.exit_code == 2
    assert "Input error" in result.stderr
    assert result.stdout == ""


def test_core_disagreement_exits_3(invoke, triangle_game_file, monkeypatch):
    monkeypatch.setattr(
        "src.core.checker.core_via_theorem1",
        lambda game, settings=None: CoreVerdict("theorem1", True),
    )

    result = invoke("core", triangle_game_file)

    assert result.exit_code == 3
    assert parse_document(result.stdout)["agree"] is False
    assert "Checker disagreement" in result.stderr


def test_cross_validate(invoke):
    result = invoke("cross-validate", "--games", 20, "--seed", 3)

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["games"] == 20
    assert data["passed"] is True
    assert invoke("cross-validate", "--games", 20, "--seed", 3).stdout == result.stdout


def test_cross_validate_bad_range(invoke):
    assert invoke("cross-validate", "--min-d", 5, "--max-d", 3).exit_code == 2


def test_lemma_tucker_with_theorem_b(invoke, tmp_path):
    path = write_complex(
        tmp_path, symmetric_2_disc(4), {0: 1, 1: 2, 2: -1, 3: -2, 4: 1}
    )

    result = invoke("lemma", "tucker", path, "--theorem-b")

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["witnesses"] == [[2, 4]]
    assert data["theorem_b"]["found"] is True


def test_lemma_sperner(invoke, tmp_path):
    path = write_complex(tmp_path, subdivided_simplex(1), {0: 1, 1: 2, 2: 3})

    result = invoke("lemma", "sperner", path)

    assert result.exit_code == 0
    assert parse_document(result.stdout)["parity"] == "odd"


def test_lemma_hypothesis_violation(invoke, tmp_path):
    path = write_complex(
        tmp_path, symmetric_2_disc(4), {0: 1, 1: 2, 2: -1, 3: -2, 4: 1}
    )

    result = invoke("lemma", "kyfan", path)

    assert result.exit_code == 2
    assert "Hypothesis violated: no complementary edge" in result.stderr


@pytest.mark.parametrize("lambda_set, code", [("+1,-2,+3", 0), ("+1,+1,+3", 2)])
def test_lemma_shashkin(invoke, tmp_path, lambda_set, code):
    path = write_complex(
        tmp_path, symmetric_2_disc(4), {0: 1, 1: 2, 2: -1, 3: -2, 4: 3}
    )

    result = invoke("lemma", "shashkin", path, "--lambda-set", lambda_set)

    assert result.exit_code == code
    if code == 0:
        assert parse_document(result.stdout)["count"] == 1


def test_lemma_suite(invoke):
    result = invoke("lemma-suite", "--lemma", "sperner")

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["passed"] is True
    assert len(data["reports"]) == 3
    assert not any(report["vacuous"] for report in data["reports"])


def test_classify(invoke, tmp_path):
    triangle = tmp_path / "triangle.toml"
    triangle.write_text(TRIANGLE_FAMILY, encoding="utf-8")
    square = tmp_path / "square.toml"
    square.write_text(SQUARE_FAMILY, encoding="utf-8")

    minimal = invoke("classify", triangle)
    not_minimal = invoke("classify", square)

    assert minimal.exit_code == 0
    assert parse_document(minimal.stdout)["weights"] == ["1/2", "1/2", "1/2"]
    assert not_minimal.exit_code == 1
    assert parse_document(not_minimal.stdout)["violation"] == "even_cycle"


def test_generate(invoke):
    result = invoke("generate", "--d", 5)

    assert result.exit_code == 0
    assert parse_document(result.stdout)["count"] == 22
    assert invoke("generate", "--d", 1).exit_code == 2


def test_triangulate(invoke):
    result = invoke("triangulate", "path-1-disc", "--size", 4)

    assert result.exit_code == 0
    data = parse_document(result.stdout)
    assert data["vertices"] == [0, 1, 2, 3, 4]
    assert "labels" not in data
    assert invoke("triangulate", "symmetric-2-disc", "--size", 5).exit_code == 2


def test_metrics_file(invoke, square_points, tmp_path):
    metrics = tmp_path / "search.prom"

    result = invoke("--metrics-file", metrics, "bs", square_points)

    assert result.exit_code == 0
    content = metrics.read_text(encoding="utf-8")
    assert "balanced_subsets_examined_total 14.0" in content
    assert "feasibility_solves_total" in content


def test_output_is_reproducible(invoke, square_points):
    assert invoke("bs", square_points).stdout == invoke("bs", square_points).stdout


def test_unknown_command(invoke):
    assert invoke("frobnicate").exit_code == 2
