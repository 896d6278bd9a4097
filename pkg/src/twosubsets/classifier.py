"""
Classification of 2-subset families.

A family of 2-subsets of [d] is minimal balanced exactly when [d] splits into
disjoint blocks, each carrying either a single pair (an isolated edge) or a
cycle of odd length >= 3 through all of its elements. Canonical weights are 1
on isolated edges and 1/2 on cycle edges.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple, Union

from src.geometry.families import Pair, TwoSubsetFamily
from src.geometry.feasibility import BalancedWitness, WitnessForm
from src.twosubsets.graph import GraphComponent, graph_of

logger = logging.getLogger(__name__)


class BlockKind(Enum):
    ODD_CYCLE = "odd_cycle"
    ISOLATED_EDGE = "isolated_edge"


@dataclass(frozen=True)
class DecompositionBlock:
    """
    One block of the decomposition.

    ``order`` is the canonical cyclic order for a cycle, or the pair for an edge.
    """

    kind: BlockKind
    order: Tuple[int, ...]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.order)

    @property
    def edges(self) -> Tuple[Pair, ...]:
        if self.kind is BlockKind.ISOLATED_EDGE:
            return (self.order,)
        ring = self.order + self.order[:1]
        return tuple(
            sorted((min(a, b), max(a, b)) for a, b in zip(ring, ring[1:]))
        )

    @property
    def edge_weight(self) -> Fraction:
        return Fraction(1) if self.kind is BlockKind.ISOLATED_EDGE else Fraction(1, 2)


@dataclass(frozen=True)
class CycleDecomposition:
    """Blocks of a minimal balanced 2-subset family, ordered by minimum element."""

    d: int
    blocks: Tuple[DecompositionBlock, ...]

    def weights(self) -> Dict[Pair, Fraction]:
        return {
            edge: block.edge_weight for block in self.blocks for edge in block.edges
        }

    def family(self) -> TwoSubsetFamily:
        return TwoSubsetFamily.of(self.d, self.weights().keys())

    def witness(self) -> BalancedWitness:
        """Canonical weights as a ShapleyCover witness in the family's pair order."""
        weights = self.weights()
        return BalancedWitness(
            tuple(weights[pair] for pair in self.family().pairs),
            WitnessForm.SHAPLEY_COVER,
        )

    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted((len(b.order) for b in self.blocks), reverse=True))


class Violation(Enum):
    UNCOVERED_ELEMENT = "uncovered_element"
    REDUNDANT_EDGES = "redundant_edges"
    DEGREE_ONE_VERTEX = "degree_one_vertex"
    EVEN_CYCLE = "even_cycle"
    NOT_EDGE_OR_CYCLE = "not_edge_or_cycle"


@dataclass(frozen=True)
class NotMinimal:
    """Why a family fails the classification, with the elements involved."""

    violation: Violation
    detail: str
    elements: Tuple[int, ...] = ()


Classification = Union[CycleDecomposition, NotMinimal]


def _classify_component(
    component: GraphComponent,
) -> Union[DecompositionBlock, NotMinimal]:
    if len(component.edges) == 1:
        return DecompositionBlock(BlockKind.ISOLATED_EDGE, component.edges[0])
    degrees = component.degrees()
    leaves = tuple(v for v, deg in sorted(degrees.items()) if deg == 1)
    if leaves:
        return NotMinimal(
            Violation.DEGREE_ONE_VERTEX,
            f"vertices {list(leaves)} have degree 1",
            leaves,
        )
    if component.is_cycle():
        if len(component.vertices) % 2 == 0:
            return NotMinimal(
                Violation.EVEN_CYCLE,
                f"cycle of even length {len(component.vertices)}",
                component.vertices,
            )
        return DecompositionBlock(BlockKind.ODD_CYCLE, component.cyclic_order())
    branches = tuple(v for v, deg in sorted(degrees.items()) if deg > 2)
    return NotMinimal(
        Violation.NOT_EDGE_OR_CYCLE,
        f"component on {list(component.vertices)} branches at {list(branches)}",
        branches,
    )


def classify(family: TwoSubsetFamily) -> Classification:
    """
    Classify a 2-subset family as a cycle/edge decomposition or explain why not.

    Checks run in a fixed order: coverage of [d], the pair count bound
    (a minimal family has at most d pairs), then each component of G(S) by
    minimum vertex.

    Args:
        family: A valid 2-subset family

    Returns:
        CycleDecomposition with canonical weights, or NotMinimal
    """
    uncovered = tuple(e for e in range(1, family.d + 1) if e not in family.support())
    if uncovered:
        return NotMinimal(
            Violation.UNCOVERED_ELEMENT,
            f"elements {list(uncovered)} lie in no pair",
            uncovered,
        )
    if len(family) > family.d:
        return NotMinimal(
            Violation.REDUNDANT_EDGES,
            f"{len(family)} pairs exceed the {family.d} independent constraints",
        )
    blocks = []
    for component in graph_of(family).components:
        outcome = _classify_component(component)
        if isinstance(outcome, NotMinimal):
            logger.debug("Family %s is not minimal: %s", family.pairs, outcome.detail)
            return outcome
        blocks.append(outcome)
    return CycleDecomposition(family.d, tuple(blocks))
