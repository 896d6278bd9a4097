"""
Standard centrally symmetric point sets with known BS(V).
"""

from fractions import Fraction
from typing import Dict, List

from src.errors import InputError
from src.geometry.rational import Point, PointSet


def _unit(k: int, d: int) -> List[Fraction]:
    return [Fraction(1) if i == k else Fraction(0) for i in range(d)]


def cross_polytope(d: int) -> PointSet:
    """
    Vertices of the regular cross polytope: +e_1..+e_d, then -e_1..-e_d.
    """
    if d < 1:
        raise InputError(f"cross polytope needs d >= 1, got {d}")
    positives = [Point(tuple(_unit(k, d))) for k in range(d)]
    return PointSet(
        tuple(positives + [-p for p in positives]),
        tuple([f"+e{k + 1}" for k in range(d)] + [f"-e{k + 1}" for k in range(d)]),
    )


def signed_simplex(d: int) -> PointSet:
    """
    +v_1..+v_d, then -v_1..-v_d, where v_i = e_i - (1/d, ..., 1/d).

    The v_i span a regular (d-1)-simplex centered at the origin inside the
    hyperplane x_1 + ... + x_d = 0. For d = 2 the points coincide in pairs.
    """
    if d < 3:
        raise InputError(f"signed simplex needs d >= 3 for distinct points, got {d}")
    shift = Fraction(1, d)
    positives = [Point(tuple(c - shift for c in _unit(k, d))) for k in range(d)]
    return PointSet(
        tuple(positives + [-p for p in positives]),
        tuple([f"+v{k + 1}" for k in range(d)] + [f"-v{k + 1}" for k in range(d)]),
    )


def simplex_vertices(d: int) -> PointSet:
    """The standard basis e_1..e_d, the vertex set of a (d-1)-simplex."""
    if d < 1:
        raise InputError(f"simplex needs d >= 1, got {d}")
    return PointSet(
        tuple(Point(tuple(_unit(k, d))) for k in range(d)),
        tuple(f"e{k + 1}" for k in range(d)),
    )


def signed_label_map(d: int) -> Dict[int, int]:
    """
    Map the signed labels +-1..+-d to positions in ``cross_polytope(d)`` or
    ``signed_simplex(d)``: +k -> k-1, -k -> d+k-1.
    """
    mapping = {}
    for k in range(1, d + 1):
        mapping[k] = k - 1
        mapping[-k] = d + k - 1
    return mapping


def simplex_label_map(d: int) -> Dict[int, int]:
    """Map Sperner labels 1..d to positions in ``simplex_vertices(d)``."""
    return {k: k - 1 for k in range(1, d + 1)}
