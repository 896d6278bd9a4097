"""
Deterministic disc triangulations used by the lemma searches.
"""

import logging
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Tuple

from src.errors import InputError
from src.lemmas.complex import DiscTriangulation

logger = logging.getLogger(__name__)

SUBDIVIDED_SIMPLEX = "subdivided-simplex"
SYMMETRIC_2_DISC = "symmetric-2-disc"
PATH_1_DISC = "path-1-disc"
KINDS = (SUBDIVIDED_SIMPLEX, SYMMETRIC_2_DISC, PATH_1_DISC)


def subdivided_simplex(k: int, dim: int = 2) -> DiscTriangulation:
    """
    Kuhn subdivision of the standard dim-simplex into k^dim cells.

    Lattice points are x in Z^dim with k >= x_1 >= ... >= x_dim >= 0; each cell
    is a base point plus a staircase walk b, b + e_p1, b + e_p1 + e_p2, ...
    The carrier of a vertex is the support of its barycentric coordinates
    (k - x_1, x_1 - x_2, ..., x_dim), numbered 1..dim+1.

    Args:
        k: Subdivision frequency, >= 1
        dim: Simplex dimension, >= 1
    """
    if k < 1 or dim < 1:
        raise InputError(
            f"subdivided-simplex needs k >= 1 and dim >= 1, got {k}, {dim}"
        )
    points = sorted(
        p
        for p in product(range(k + 1), repeat=dim)
        if all(a >= b for a, b in zip(p, p[1:]))
    )
    index = {p: i for i, p in enumerate(points)}

    cells = set()
    for base in points:
        for order in permutations(range(dim)):
            walk = [base]
            current = list(base)
            for axis in order:
                current[axis] += 1
                walk.append(tuple(current))
            if all(p in index for p in walk):
                cells.add(tuple(sorted(index[p] for p in walk)))

    carriers: Dict[int, FrozenSet[int]] = {}
    for point, vertex in index.items():
        padded = (k,) + point + (0,)
        barycentric = [padded[i] - padded[i + 1] for i in range(dim + 1)]
        carriers[vertex] = frozenset(i + 1 for i, y in enumerate(barycentric) if y > 0)
    boundary = frozenset(v for v, c in carriers.items() if len(c) < dim + 1)

    return DiscTriangulation(
        dim=dim,
        vertices=tuple(range(len(points))),
        cells=tuple(sorted(cells)),
        boundary_vertices=boundary,
        carriers=carriers,
    )


def symmetric_2_disc(n: int, interior: int = 1) -> DiscTriangulation:
    """
    A 2-disc bounded by an n-gon 0..n-1 with antipode i <-> i + n/2.

    ``interior`` selects the inside: 0 fans from vertex 0, 1 cones from a center
    n, 2 places vertices n and n+1 on the diameter 0 -- n -- n+1 -- n/2 and
    fans each half from them.
    """
    if n < 4 or n % 2:
        raise InputError(f"symmetric-2-disc needs an even boundary size >= 4, got {n}")
    half = n // 2
    ring = [(i, (i + 1) % n) for i in range(n)]
    cells: List[Tuple[int, ...]] = []
    if interior == 0:
        cells = [(0, i, i + 1) for i in range(1, n - 1)]
    elif interior == 1:
        cells = [(n, a, b) for a, b in ring]
    elif interior == 2:
        a, b = n, n + 1
        upper, lower = max(1, half // 2), half + max(1, half // 2)
        cells = [(a,) + ring[i] for i in range(0, upper)]
        cells += [(b,) + ring[i] for i in range(upper, lower)]
        cells += [(a,) + ring[i] for i in range(lower, n)]
        cells += [(a, b, upper), (a, b, lower)]
    else:
        raise InputError(
            f"symmetric-2-disc takes 0, 1 or 2 interior vertices, got {interior}"
        )
    return DiscTriangulation(
        dim=2,
        vertices=tuple(range(n + interior)),
        cells=tuple(sorted(tuple(sorted(c)) for c in cells)),
        boundary_vertices=frozenset(range(n)),
        antipode={i: (i + half) % n for i in range(n)},
    )


def path_1_disc(m: int) -> DiscTriangulation:
    """A path 0 -- 1 -- ... -- m whose endpoints are antipodal."""
    if m < 1:
        raise InputError(f"path-1-disc needs at least one edge, got {m}")
    return DiscTriangulation(
        dim=1,
        vertices=tuple(range(m + 1)),
        cells=tuple((i, i + 1) for i in range(m)),
        boundary_vertices=frozenset({0, m}),
        antipode={0: m, m: 0},
    )


def generate_disc_triangulation(
    kind: str, size: int, dim: int = 2, interior: int = 1
) -> DiscTriangulation:
    """
    Build one of the named triangulation families.

    Args:
        kind: "subdivided-simplex", "symmetric-2-disc" or "path-1-disc"
        size: Subdivision frequency, boundary polygon size, or path length
        dim: Dimension for subdivided-simplex
        interior: Interior vertex count for symmetric-2-disc

    Raises:
        InputError: For an unknown kind or an invalid size
    """
    if kind == SUBDIVIDED_SIMPLEX:
        triangulation = subdivided_simplex(size, dim)
    elif kind == SYMMETRIC_2_DISC:
        triangulation = symmetric_2_disc(size, interior)
    elif kind == PATH_1_DISC:
        triangulation = path_1_disc(size)
    else:
        raise InputError(
            f"Unknown triangulation kind {kind!r}; expected one of {KINDS}"
        )
    logger.info(
        "Built %s(%d): %d vertices, %d cells",
        kind,
        size,
        len(triangulation.vertices),
        len(triangulation.cells),
    )
    return triangulation
