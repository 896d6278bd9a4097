"""
Midpoint embedding of 2-subset families: the pair (i, j) becomes e_ij = (e_i + e_j) / 2.

Under this map a family is Shapley-balanced exactly when its points contain the
centroid c_d = (1/d, ..., 1/d) of V_d in their convex hull.
"""

from fractions import Fraction
from typing import Optional, Tuple

from src.errors import InputError
from src.geometry.families import Pair, TwoSubsetFamily, complete_family
from src.geometry.feasibility import BalancedWitness, WitnessForm
from src.geometry.rational import Point, PointSet

HALF = Fraction(1, 2)


def midpoint(pair: Pair, d: int) -> Point:
    i, j = pair
    return Point(
        tuple(HALF if k in (i, j) else Fraction(0) for k in range(1, d + 1))
    )


def midpoint_embedding(family: TwoSubsetFamily, d: Optional[int] = None) -> PointSet:
    """
    Map every pair of the family to its edge midpoint in R^d.

    Args:
        family: The 2-subset family, already in canonical order
        d: Ambient dimension; defaults to the family's own d

    Returns:
        One point per pair, in the family's order, labelled "e<i>,<j>"

    Raises:
        InputError: If a pair uses an element outside [d] or the family is empty
    """
    d = family.d if d is None else d
    if not family.pairs:
        raise InputError("Cannot embed an empty family")
    for i, j in family.pairs:
        if j > d:
            raise InputError(f"Pair ({i}, {j}) does not fit in dimension {d}")
    return PointSet(
        tuple(midpoint(pair, d) for pair in family.pairs),
        tuple(f"e{i},{j}" for i, j in family.pairs),
    )


def midpoint_set(d: int) -> PointSet:
    """V_d: the midpoints of all C(d, 2) edges of the standard simplex."""
    return midpoint_embedding(complete_family(d), d)


def simplex_centroid(d: int) -> Point:
    """c_d = (1/d, ..., 1/d), the centroid of V_d."""
    return Point(tuple(Fraction(1, d) for _ in range(d)))


def shapley_to_convex(witness: BalancedWitness, d: int) -> BalancedWitness:
    """Convert Shapley weights of a 2-subset family into lambda_k = 2 w_k / d."""
    if witness.form is not WitnessForm.SHAPLEY_COVER:
        raise InputError("Expected a ShapleyCover witness")
    return BalancedWitness(
        tuple(2 * w / d for w in witness.weights), WitnessForm.CONVEX_COMBINATION
    )


def convex_to_shapley(witness: BalancedWitness, d: int) -> BalancedWitness:
    """Inverse of shapley_to_convex: w_k = lambda_k * d / 2."""
    if witness.form is not WitnessForm.CONVEX_COMBINATION:
        raise InputError("Expected a ConvexCombination witness")
    return BalancedWitness(
        tuple(w * d / 2 for w in witness.weights), WitnessForm.SHAPLEY_COVER
    )


def pull_back(indices: Tuple[int, ...], family: TwoSubsetFamily) -> TwoSubsetFamily:
    """Turn 0-based positions into an embedded family back into a sub-family."""
    return TwoSubsetFamily(family.d, tuple(family.pairs[i] for i in sorted(indices)))
