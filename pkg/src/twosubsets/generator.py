"""
Streaming generation of every minimal balanced 2-subset family of [d].

Each family is a set partition of [d] into blocks of size 2 or of odd size >= 3,
with one edge per 2-block and one undirected Hamiltonian cycle per odd block.
"""

from itertools import combinations, permutations, product
from typing import Iterator, List, Sequence, Tuple

from src.errors import InputError
from src.geometry.families import TwoSubsetFamily
from src.twosubsets.classifier import BlockKind, CycleDecomposition, DecompositionBlock


def is_block_size(size: int) -> bool:
    """Block sizes allowed by the classification: 2 and odd sizes >= 3."""
    return size == 2 or (size >= 3 and size % 2 == 1)


def set_partitions(elements: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    Partitions of ``elements`` into blocks of allowed sizes.

    Blocks come out sorted by minimum element and partitions in a fixed
    canonical order: the block holding the smallest element is chosen first,
    by size and then lexicographically.
    """
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for size in range(2, len(elements) + 1):
        if not is_block_size(size):
            continue
        for companions in combinations(rest, size - 1):
            block = (first,) + companions
            remaining = [e for e in rest if e not in companions]
            for tail in set_partitions(remaining):
                yield (block,) + tail


def cycles_on(block: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """
    The (m - 1)! / 2 undirected cycles through all of ``block``, in canonical form:
    starting at the minimum and heading to the smaller of its two neighbors.
    """
    start, rest = block[0], block[1:]
    for order in permutations(rest):
        if order[0] < order[-1]:
            yield (start,) + order


def block_choices(block: Tuple[int, ...]) -> List[DecompositionBlock]:
    """All ways a block can be carried: its single pair, or one of its odd cycles."""
    if len(block) == 2:
        return [DecompositionBlock(BlockKind.ISOLATED_EDGE, tuple(block))]
    return [
        DecompositionBlock(BlockKind.ODD_CYCLE, order) for order in cycles_on(block)
    ]


def decompositions_on(
    elements: Sequence[int],
) -> Iterator[Tuple[DecompositionBlock, ...]]:
    """
    Every edge/odd-cycle decomposition covering exactly ``elements``.

    An empty element list yields one empty decomposition; a single element
    yields none.
    """
    for partition in set_partitions(list(elements)):
        yield from product(*(block_choices(block) for block in partition))


def generate_minimal_families(d: int) -> Iterator[TwoSubsetFamily]:
    """
    Stream every minimal balanced 2-subset family of [d] exactly once.

    Args:
        d: Size of the ground set, at least 2

    Returns:
        An iterator over families in canonical partition order, then canonical
        cycle order

    Raises:
        InputError: If d < 2 (raised immediately, not on first iteration)
    """
    if d < 2:
        raise InputError(f"No 2-subset family covers [{d}]; need d >= 2")
    return (
        CycleDecomposition(d, blocks).family()
        for blocks in decompositions_on(range(1, d + 1))
    )
