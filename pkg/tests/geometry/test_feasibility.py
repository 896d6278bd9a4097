"""
Test suite for the exact feasibility solver and balancedness witnesses.
"""

# pylint: disable=redefined-outer-name
from fractions import Fraction

import pytest
from prometheus_client import CollectorRegistry

from src.errors import InputError
from src.geometry.families import SubsetFamily
from src.geometry.feasibility import (
    BalancedWitness,
    WitnessForm,
    convex_membership,
    shapley_weights,
    solve_nonnegative,
)
from src.geometry.rational import Point
from src.monitors.search_monitor import SearchMonitor


@pytest.fixture
def monitor():
    """
    Fixture for a SearchMonitor on its own registry.
    """
    return SearchMonitor(registry=CollectorRegistry())


def fractions(*rows):
    return [[Fraction(v) for v in row] for row in rows]


def test_solve_nonnegative_feasible():
    solution = solve_nonnegative(fractions([1, 1], [1, -1]), [Fraction(2), Fraction(0)])

    assert solution == (Fraction(1), Fraction(1))


def test_solve_nonnegative_infeasible():
    # x + y = -1 has no nonnegative solution
    assert solve_nonnegative(fractions([1, 1]), [Fraction(-1)]) is None


def test_solve_nonnegative_negative_rhs():
    solution = solve_nonnegative(fractions([-1, 0]), [Fraction(-3)])

    assert solution is not None
    assert solution[0] == 3


def test_solve_nonnegative_shape_errors():
    with pytest.raises(InputError, match="2 rows but 1 right-hand sides"):
        solve_nonnegative(fractions([1], [1]), [Fraction(1)])

    with pytest.raises(InputError, match="Row 1 has 1 entries, expected 2"):
        solve_nonnegative(fractions([1, 1], [1]), [Fraction(1), Fraction(1)])


def test_solve_is_deterministic():
    matrix = fractions([1, 1, 1], [1, 2, 3])
    rhs = [Fraction(1), Fraction(2)]

    assert solve_nonnegative(matrix, rhs) == solve_nonnegative(matrix, rhs)


def test_convex_membership_midpoint():
    target = Point.of([0, 0])
    generators = [Point.of([1, 0]), Point.of([-1, 0])]

    witness = convex_membership(target, generators)

    assert witness is not None
    assert witness.form is WitnessForm.CONVEX_COMBINATION
    assert witness.weights == (Fraction(1, 2), Fraction(1, 2))
    assert witness.satisfies_convex(target, generators)


def test_convex_membership_outside_hull():
    generators = [Point.of([1, 0]), Point.of([0, 1])]

    assert convex_membership(Point.of([1, 1]), generators) is None
    assert convex_membership(Point.of(["1/2", "1/2"]), generators) is not None


def test_convex_membership_errors():
    with pytest.raises(InputError, match="at least one generator"):
        convex_membership(Point.of([0]), [])

    with pytest.raises(InputError, match="Generator 2 has dimension 1"):
        convex_membership(Point.of([0, 0]), [Point.of([1, 0]), Point.of([1])])


def test_shapley_weights_triangle():
    family = SubsetFamily.of([[1, 2], [2, 3], [1, 3]])

    witness = shapley_weights(family, 3)

    assert witness.weights == (Fraction(1, 2),) * 3
    assert witness.satisfies_cover(family, 3)


def test_shapley_weights_uncovered_element():
    assert shapley_weights(SubsetFamily.of([[1, 2]]), 3) is None


def test_shapley_weights_out_of_range():
    with pytest.raises(InputError, match="outside"):
        shapley_weights(SubsetFamily.of([[1, 4]]), 3)


def test_witness_checks_reject_wrong_form():
    family = SubsetFamily.of([[1]])
    convex = BalancedWitness((Fraction(1),), WitnessForm.CONVEX_COMBINATION)
    cover = BalancedWitness((Fraction(1),), WitnessForm.SHAPLEY_COVER)

    assert cover.satisfies_cover(family, 1)
    assert not convex.satisfies_cover(family, 1)
    assert not cover.satisfies_convex(Point.of([0]), [Point.of([0])])


def test_witness_checks_reject_bad_weights():
    target = Point.of([0])
    generators = [Point.of([1]), Point.of([-1])]

    negative = BalancedWitness(
        (Fraction(3, 2), Fraction(-1, 2)), WitnessForm.CONVEX_COMBINATION
    )
    short = BalancedWitness((Fraction(1),), WitnessForm.CONVEX_COMBINATION)

    assert not negative.satisfies_convex(target, generators)
    assert not short.satisfies_convex(target, generators)


def test_solves_are_counted(monitor):
    shapley_weights(SubsetFamily.of([[1, 2], [2, 3], [1, 3]]), 3, monitor)
    convex_membership(Point.of([0]), [Point.of([1]), Point.of([-1])], monitor)

    assert monitor.value("feasibility_solves_total") == 2
    assert monitor.value("simplex_pivots_total") > 0
