"""
Cross-checks between the combinatorial classification and the geometric enumeration.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from src.balanced.enumerator import enumerate_minimal_balanced
from src.config import Settings
from src.errors import BudgetExceededError, InputError
from src.geometry.embedding import midpoint_embedding, pull_back, simplex_centroid
from src.geometry.families import Pair, TwoSubsetFamily, complete_family
from src.geometry.feasibility import BalancedWitness, convex_membership, shapley_weights
from src.monitors.search_monitor import SearchMonitor
from src.twosubsets.generator import generate_minimal_families
from src.twosubsets.graph import GraphComponent, graph_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    """Set comparison of generated families against the geometric catalog of V_d."""

    d: int
    generated_count: int
    geometric_count: int
    only_generated: Tuple[Tuple[Pair, ...], ...]
    only_geometric: Tuple[Tuple[Pair, ...], ...]
    subsets_examined: int

    @property
    def equal(self) -> bool:
        return not self.only_generated and not self.only_geometric


def verify_theorem1(
    d: int,
    settings: Optional[Settings] = None,
    monitor: Optional[SearchMonitor] = None,
) -> VerificationReport:
    """
    Compare generate_minimal_families(d) with BS(V_d) pulled back to pairs.

    Args:
        d: Ground set size, 2 <= d <= settings.max_theorem1_d
        settings: Budgets; defaults to ``Settings()``
        monitor: Optional metrics sink

    Returns:
        The verification report (``equal`` is expected to be True)

    Raises:
        InputError: If d < 2
        BudgetExceededError: If d exceeds the verification ceiling or the
            enumeration budget runs out
    """
    settings = settings or Settings()
    if d < 2:
        raise InputError(f"verify_theorem1 needs d >= 2, got {d}")
    if d > settings.max_theorem1_d:
        raise BudgetExceededError(
            "Theorem 1 verification ceiling exceeded", d, settings.max_theorem1_d
        )

    generated = {family.key() for family in generate_minimal_families(d)}

    full = complete_family(d)
    catalog = enumerate_minimal_balanced(midpoint_embedding(full, d), settings, monitor)
    geometric = {pull_back(member, full).key() for member in catalog.members}

    report = VerificationReport(
        d=d,
        generated_count=len(generated),
        geometric_count=len(geometric),
        only_generated=tuple(sorted(tuple(sorted(k)) for k in generated - geometric)),
        only_geometric=tuple(sorted(tuple(sorted(k)) for k in geometric - generated)),
        subsets_examined=catalog.subsets_examined,
    )
    if report.equal:
        logger.info("d=%d: %d families agree", d, report.generated_count)
    else:
        logger.warning(
            "d=%d: %d generated vs %d geometric families differ",
            d,
            report.generated_count,
            report.geometric_count,
        )
    return report


@dataclass(frozen=True)
class ComponentBalance:
    """Balance of one component of G(S) within V_n on its own vertices."""

    component: GraphComponent
    witness: Optional[BalancedWitness]

    @property
    def balanced(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class ComponentBalanceReport:
    family: TwoSubsetFamily
    balanced: bool
    components: Tuple[ComponentBalance, ...]


def component_balance_check(
    family: TwoSubsetFamily, monitor: Optional[SearchMonitor] = None
) -> ComponentBalanceReport:
    """
    Check each component of a balanced family on its own vertex set.

    The family as a whole is checked first; when it is not balanced the report
    says so and makes no component claims.

    Args:
        family: A 2-subset family of [d]
        monitor: Optional metrics sink

    Returns:
        Per-component feasibility with witnesses over relabelled vertices
    """
    whole = (
        shapley_weights(family.as_subset_family(), family.d, monitor)
        if family.pairs
        else None
    )
    if whole is None:
        logger.info("Family %s is not balanced; no component check", family.pairs)
        return ComponentBalanceReport(family, False, ())

    results = []
    for component in graph_of(family).components:
        relabel = {v: k for k, v in enumerate(component.vertices, start=1)}
        n = len(component.vertices)
        local = TwoSubsetFamily.of(
            n, [(relabel[i], relabel[j]) for i, j in component.edges]
        )
        witness = convex_membership(
            simplex_centroid(n), midpoint_embedding(local, n).points, monitor
        )
        results.append(ComponentBalance(component, witness))
    return ComponentBalanceReport(family, True, tuple(results))

