"""
Test suite for disc triangulations, labeled complexes and signed label sets.
"""

import pytest

from src.errors import InputError
from src.lemmas.complex import (
    DiscTriangulation,
    LabeledComplex,
    SignedLabelSet,
    antipode_from_pairs,
)
from src.lemmas.triangulations import path_1_disc, symmetric_2_disc


def triangle(**overrides):
    fields = {
        "dim": 2,
        "vertices": (0, 1, 2),
        "cells": ((0, 1, 2),),
        "boundary_vertices": frozenset({0, 1, 2}),
    }
    fields.update(overrides)
    return DiscTriangulation(**fields)


def test_single_triangle():
    tri = triangle()

    assert tri.edges == ((0, 1), (0, 2), (1, 2))
    assert tri.interior_vertices == ()
    assert tri.boundary_representatives == ()


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"dim": 0, "cells": ((0,), (1,), (2,))}, "dimension must be >= 1"),
        ({"vertices": (0, 1, 1)}, "distinct"),
        ({"cells": ()}, "at least one maximal cell"),
        ({"cells": ((0, 1),)}, "must have 3 distinct vertices"),
        ({"cells": ((0, 1, 1),)}, "must have 3 distinct vertices"),
        ({"cells": ((0, 2, 1),)}, "sorted"),
        ({"cells": ((0, 1, 3),)}, "unknown vertices"),
        ({"vertices": (0, 1, 2, 3)}, "Vertices in no cell"),
        ({"boundary_vertices": frozenset({0, 1})}, "Declared boundary"),
        (
            {"carriers": {0: frozenset({1}), 1: frozenset({4}), 2: frozenset({3})}},
            "carrier",
        ),
    ],
)
def test_triangulation_validation(overrides, message):
    with pytest.raises(InputError, match=message):
        triangle(**overrides)


def test_repeated_cells_rejected():
    with pytest.raises(InputError, match="Repeated cells"):
        triangle(cells=((0, 1, 2), (0, 1, 2)))


def test_overfull_ridge_rejected():
    with pytest.raises(InputError, match="more than two cells"):
        DiscTriangulation(
            dim=2,
            vertices=(0, 1, 2, 3, 4),
            cells=((0, 1, 2), (0, 1, 3), (0, 1, 4)),
            boundary_vertices=frozenset({0, 1, 2, 3, 4}),
        )


def square_with_center(antipode):
    return DiscTriangulation(
        dim=2,
        vertices=(0, 1, 2, 3, 4),
        cells=((0, 1, 4), (0, 3, 4), (1, 2, 4), (2, 3, 4)),
        boundary_vertices=frozenset({0, 1, 2, 3}),
        antipode=antipode,
    )


@pytest.mark.parametrize(
    "antipode, message",
    [
        ({0: 2, 2: 0}, "exactly the boundary"),
        ({0: 0, 1: 3, 2: 2, 3: 1}, "fixes boundary vertex 0"),
        ({0: 1, 1: 2, 2: 3, 3: 0}, "no involution"),
    ],
)
def test_antipode_validation(antipode, message):
    with pytest.raises(InputError, match=message):
        square_with_center(antipode)


def test_antipode_must_map_faces_to_faces():
    hexagon = symmetric_2_disc(6)

    with pytest.raises(InputError, match="non-face"):
        DiscTriangulation(
            dim=2,
            vertices=hexagon.vertices,
            cells=hexagon.cells,
            boundary_vertices=hexagon.boundary_vertices,
            antipode={0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4},
        )


def test_boundary_representatives_and_interior():
    disc = symmetric_2_disc(8, interior=1)

    assert disc.boundary_representatives == (0, 1, 2, 3)
    assert disc.interior_vertices == (8,)


def test_labeled_complex_requires_every_label():
    with pytest.raises(InputError, match="Vertices without labels: \\[2\\]"):
        LabeledComplex(triangle(), {0: 1, 1: 2})


def test_require_signed():
    path = path_1_disc(2)

    LabeledComplex(path, {0: 1, 1: -2, 2: -1}).require_signed(2)

    with pytest.raises(InputError, match="labels must be nonzero"):
        LabeledComplex(path, {0: 1, 1: 0, 2: -1}).require_signed()

    with pytest.raises(InputError, match="outside \\+-1..\\+-2"):
        LabeledComplex(path, {0: 1, 1: 3, 2: -1}).require_signed(2)


def test_cell_labels():
    complex_ = LabeledComplex(triangle(), {0: 3, 1: 1, 2: 2})

    assert complex_.cell_labels((0, 1, 2)) == (3, 1, 2)
    assert complex_.dim == 2


def test_signed_label_set():
    labels = SignedLabelSet.parse("+1, -2,+3")

    assert labels.labels == frozenset({1, -2, 3})
    assert labels.negated().labels == frozenset({-1, 2, -3})
    labels.require_full(3)


@pytest.mark.parametrize(
    "text, d, message",
    [
        ("+1,+1", 2, "repeats a label"),
        ("+1,x", 2, "Invalid label set"),
        ("+1,+3", 2, "one label of each magnitude 1..2"),
        ("+1,-1", 2, "one label of each magnitude 1..2"),
        ("+1,+2", 3, "one label of each magnitude 1..3"),
        ("0,+1", 1, "one label of each magnitude 1..1"),
    ],
)
def test_signed_label_set_rejects(text, d, message):
    with pytest.raises(InputError, match=message):
        SignedLabelSet.parse(text).require_full(d)


def test_antipode_from_pairs():
    assert antipode_from_pairs([(0, 2), (1, 3)]) == {0: 2, 2: 0, 1: 3, 3: 1}

    with pytest.raises(InputError, match="more than one antipodal pair"):
        antipode_from_pairs([(0, 2), (2, 1)])
