"""
The graph G(S) of a 2-subset family: vertex i--j is an edge iff (i, j) is in the family.
"""

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple

from src.geometry.families import Pair, TwoSubsetFamily


@dataclass(frozen=True)
class GraphComponent:
    """One connected component: sorted vertices and its edges in family order."""

    vertices: Tuple[int, ...]
    edges: Tuple[Pair, ...]

    def degrees(self) -> Dict[int, int]:
        counts = {v: 0 for v in self.vertices}
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    def is_cycle(self) -> bool:
        """A connected component is a polygon iff every degree is 2."""
        return len(self.vertices) >= 3 and all(
            deg == 2 for deg in self.degrees().values()
        )

    def cyclic_order(self) -> Tuple[int, ...]:
        """
        Vertices of a cycle component in canonical order: start at the minimum
        vertex and continue toward its smaller neighbor.
        """
        adjacency = _adjacency(self.edges)
        start = self.vertices[0]
        order = [start]
        previous, current = start, min(adjacency[start])
        while current != start:
            order.append(current)
            following = [v for v in adjacency[current] if v != previous]
            previous, current = current, following[0]
        return tuple(order)


@dataclass(frozen=True)
class FamilyGraph:
    """G(S) over [d]; only vertices incident to a pair are graph vertices."""

    d: int
    vertices: FrozenSet[int]
    edges: Tuple[Pair, ...]
    components: Tuple[GraphComponent, ...]

    @property
    def vertex_count(self) -> int:
        """n(S), the number of vertices of G(S)."""
        return len(self.vertices)

    def degree(self, vertex: int) -> int:
        return sum(1 for edge in self.edges if vertex in edge)


def _adjacency(edges: Tuple[Pair, ...]) -> Dict[int, Set[int]]:
    adjacency: Dict[int, Set[int]] = defaultdict(set)
    for i, j in edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    return adjacency


def graph_of(family: TwoSubsetFamily) -> FamilyGraph:
    """
    Build G(S) and its connected components.

    Components are ordered by their minimum vertex.

    Args:
        family: A valid 2-subset family

    Returns:
        The family graph
    """
    adjacency = _adjacency(family.pairs)
    seen: Set[int] = set()
    components: List[GraphComponent] = []
    for root in sorted(adjacency):
        if root in seen:
            continue
        queue = deque([root])
        seen.add(root)
        members = {root}
        while queue:
            vertex = queue.popleft()
            for neighbor in adjacency[vertex]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    members.add(neighbor)
                    queue.append(neighbor)
        components.append(
            GraphComponent(
                tuple(sorted(members)),
                tuple(pair for pair in family.pairs if pair[0] in members),
            )
        )
    return FamilyGraph(
        family.d, frozenset(adjacency), family.pairs, tuple(components)
    )
