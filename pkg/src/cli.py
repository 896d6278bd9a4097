"""
Command-line entry point: ``balanced-sets <command>``.

Documents go to standard output, diagnostics to standard error. Exit codes:
0 success or true verdict, 1 false verdict, 2 input error, 3 budget exceeded
or checker disagreement.
"""

import functools
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Tuple

import click

from src.balanced.enumerator import (
    brute_force_minimal_balanced,
    enumerate_minimal_balanced,
)
from src.balanced.point_sets import cross_polytope, signed_simplex, simplex_vertices
from src.config import Settings
from src.core.checker import (
    core_direct,
    core_via_theorem1,
    cross_validate,
    cross_validate_all,
)
from src.core.game import random_games
from src.documents import convert
from src.documents.store import dump_document, read_document
from src.errors import (
    BudgetExceededError,
    CoreDisagreementError,
    HypothesisError,
    InputError,
)
from src.geometry.embedding import midpoint_set
from src.lemmas.complex import SignedLabelSet
from src.lemmas.exhaustive import LemmaSuite
from src.lemmas.searchers import LEMMAS, run_lemma
from src.lemmas.theorem_b import standard_point_set, theorem_b_witness
from src.lemmas.triangulations import KINDS, generate_disc_triangulation
from src.monitors.search_monitor import SearchMonitor
from src.partitions.counter import PartitionTable, check_alternating_identity
from src.twosubsets.classifier import CycleDecomposition, classify
from src.twosubsets.generator import generate_minimal_families
from src.twosubsets.verification import verify_theorem1

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

POINT_SETS = {
    "cross-polytope": cross_polytope,
    "signed-simplex": signed_simplex,
    "simplex": simplex_vertices,
    "midpoints": midpoint_set,
}

logger = logging.getLogger(__name__)


@dataclass
class CliState:
    settings: Settings
    monitor: SearchMonitor


def emit(document) -> None:
    click.echo(dump_document(document), nl=False)


def verdict(flag: bool) -> int:
    return EXIT_OK if flag else EXIT_FALSE


def exit_codes(command: Callable[..., Optional[int]]) -> Callable[..., None]:
    """Map the error hierarchy onto exit codes; the command returns its verdict code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = command(*args, **kwargs)
        except HypothesisError as e:
            click.echo(f"Hypothesis violated: {e}", err=True)
            code = EXIT_INPUT
        except InputError as e:
            click.echo(f"Input error: {e}", err=True)
            code = EXIT_INPUT
        except BudgetExceededError as e:
            click.echo(f"Budget exceeded: {e}", err=True)
            code = EXIT_BUDGET
        except CoreDisagreementError as e:
            click.echo(f"Checker disagreement: {e}", err=True)
            code = EXIT_BUDGET
        ctx.exit(code or EXIT_OK)

    return wrapper


@click.group()
@click.option("--verbose", is_flag=True, help="Log search detail at DEBUG level.")
@click.option(
    "--metrics-file",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write search counters here in the Prometheus text format.",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, metrics_file: Optional[Path]) -> None:
    """Minimal balanced sets, families, games and lemma checks."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        settings = Settings.from_env()
    except InputError as e:
        click.echo(f"Input error: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    monitor = SearchMonitor()
    ctx.obj = CliState(settings, monitor)
    if metrics_file is not None:
        ctx.call_on_close(functools.partial(monitor.write, metrics_file))


@cli.command("bs")
@click.argument("points_file", type=click.Path(path_type=Path))
@click.option("--oracle", is_flag=True, help="Cross-check against brute force.")
@click.pass_obj
@exit_codes
def bs_command(state: CliState, points_file: Path, oracle: bool) -> int:
    """Print BS(V), the minimal balanced subsets of a point set, with witnesses."""
    point_set = convert.point_set_from_document(read_document(points_file, "point_set"))
    catalog = enumerate_minimal_balanced(point_set, state.settings, state.monitor)
    agrees = None
    if oracle:
        problems = catalog.verify()
        for problem in problems:
            logger.error("Catalog check: %s", problem)
        expected = brute_force_minimal_balanced(
            point_set, state.settings, state.monitor
        )
        agrees = not problems and catalog.as_sets() == expected
    emit(convert.catalog_to_document(catalog, agrees))
    return EXIT_BUDGET if agrees is False else EXIT_OK


@cli.command("point-set")
@click.argument("kind", type=click.Choice(sorted(POINT_SETS)))
@click.option("--d", "d", type=int, required=True, help="Ambient dimension.")
@exit_codes
def point_set_command(kind: str, d: int) -> int:
    """Write a standard point set document."""
    emit(convert.point_set_to_document(POINT_SETS[kind](d)))
    return EXIT_OK


@cli.command("verify-theorem1")
@click.option("--d", "d", type=int, required=True, help="Ground set size.")
@click.pass_obj
@exit_codes
def verify_theorem1_command(state: CliState, d: int) -> int:
    """Compare the odd-cycle/edge generator with BS(V_d)."""
    report = verify_theorem1(d, state.settings, state.monitor)
    emit(convert.verification_to_document(report))
    return verdict(report.equal)


@cli.command("partitions")
@click.option("--max-d", type=click.IntRange(min=0), required=True)
@exit_codes
def partitions_command(max_d: int) -> int:
    """Tabulate q(d), b(d) and labelled family counts, checking the identity."""
    identity = check_alternating_identity(max_d)
    emit(convert.partition_table_to_document(PartitionTable.build(max_d), identity))
    return verdict(identity.holds)


@cli.command("core")
@click.argument("game_file", type=click.Path(path_type=Path))
@click.option(
    "--method",
    type=click.Choice(["direct", "theorem1", "both"]),
    default="both",
    show_default=True,
)
@click.pass_obj
@exit_codes
def core_command(state: CliState, game_file: Path, method: str) -> int:
    """Decide whether the core of a game is nonempty, with a certificate."""
    game = convert.game_from_document(read_document(game_file, "game"))
    if method == "direct":
        result = core_direct(game, state.monitor)
    elif method == "theorem1":
        result = core_via_theorem1(game, state.settings)
    else:
        try:
            checked = cross_validate(game, state.settings, state.monitor)
        except CoreDisagreementError as e:
            emit(convert.cross_validation_to_document(game, e.direct, e.theorem1))
            raise
        emit(
            convert.cross_validation_to_document(game, checked.direct, checked.theorem1)
        )
        if not checked.certificates_valid:
            return EXIT_BUDGET
        return verdict(checked.direct.nonempty)
    emit(convert.core_verdict_to_document(result, game))
    return verdict(result.nonempty)


@cli.command("cross-validate")
@click.option("--games", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--min-d", type=int, default=2, show_default=True)
@click.option("--max-d", type=int, default=6, show_default=True)
@click.pass_obj
@exit_codes
def cross_validate_command(
    state: CliState, games: int, seed: int, min_d: int, max_d: int
) -> int:
    """Run both core checkers on seeded random games."""
    stream = random_games(games, seed, min_d, max_d)
    summary = cross_validate_all(stream, state.settings, state.monitor)
    emit(convert.cross_validation_summary_to_document(summary, seed, min_d, max_d))
    return EXIT_OK if summary.passed else EXIT_BUDGET


@cli.command("lemma")
@click.argument("lemma", type=click.Choice(LEMMAS))
@click.argument("complex_file", type=click.Path(path_type=Path))
@click.option("--palette", type=click.IntRange(min=1), help="Ky Fan label bound.")
@click.option("--lambda-set", help='Shashkin label set, e.g. "+1,-2,+3".')
@click.option("--theorem-b", is_flag=True, help="Also look for a Theorem B witness.")
@click.pass_obj
@exit_codes
def lemma_command(
    state: CliState,
    lemma: str,
    complex_file: Path,
    palette: Optional[int],
    lambda_set: Optional[str],
    theorem_b: bool,
) -> int:
    """Search a labeled complex for the witnesses of one lemma."""
    complex_ = convert.labeled_complex_from_document(
        read_document(complex_file, "labeled_complex")
    )
    labels = SignedLabelSet.parse(lambda_set) if lambda_set is not None else None
    result = run_lemma(lemma, complex_, palette, labels)
    witness = None
    if theorem_b:
        point_set, label_map = standard_point_set(lemma, complex_.dim)
        witness = theorem_b_witness(
            point_set, complex_, label_map, None, state.settings, state.monitor
        )
    emit(convert.lemma_result_to_document(result, complex_, witness))
    return EXIT_OK


@cli.command("lemma-suite")
@click.option(
    "--lemma",
    "lemmas",
    type=click.Choice(LEMMAS),
    multiple=True,
    help="Restrict to these lemmas (repeatable); all by default.",
)
@click.pass_obj
@exit_codes
def lemma_suite_command(state: CliState, lemmas: Tuple[str, ...]) -> int:
    """Run the exhaustive labeling suites on the standard triangulations."""
    suite = LemmaSuite(state.settings, state.monitor)
    reports = suite.run(lemmas or LEMMAS)
    emit(convert.suite_reports_to_document(reports))
    return verdict(all(r.passed for r in reports))


@cli.command("classify")
@click.argument("family_file", type=click.Path(path_type=Path))
@exit_codes
def classify_command(family_file: Path) -> int:
    """Decide whether a 2-subset family is minimal balanced."""
    family = convert.two_subset_family_from_document(
        read_document(family_file, "two_subset_family")
    )
    classification = classify(family)
    emit(convert.classification_to_document(family, classification))
    return verdict(isinstance(classification, CycleDecomposition))


@cli.command("generate")
@click.option("--d", "d", type=int, required=True, help="Ground set size.")
@exit_codes
def generate_command(d: int) -> int:
    """List every minimal balanced 2-subset family of [d]."""
    emit(convert.family_stream_to_document(d, generate_minimal_families(d)))
    return EXIT_OK


@cli.command("triangulate")
@click.argument("kind", type=click.Choice(KINDS))
@click.option("--size", type=int, required=True)
@click.option("--dim", type=int, default=2, show_default=True)
@click.option("--interior", type=int, default=1, show_default=True)
@exit_codes
def triangulate_command(kind: str, size: int, dim: int, interior: int) -> int:
    """Write an unlabeled complex skeleton."""
    triangulation = generate_disc_triangulation(kind, size, dim, interior)
    emit(convert.triangulation_to_document(triangulation))
    return EXIT_OK


def main() -> None:
    cli(prog_name="balanced-sets")


if __name__ == "__main__":
    main()
