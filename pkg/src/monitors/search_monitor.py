"""
Search monitoring module providing Prometheus counters for the exhaustive searches.
Tracks subsets examined, feasibility solves, simplex pivots and labelings checked.
"""

# Standard library imports
from pathlib import Path
from typing import Optional

# Third-party imports
from prometheus_client import CollectorRegistry, Counter, Gauge, write_to_textfile


class SearchMonitor:
    """
    A class to count search work with Prometheus metrics integration.
    """

    def __init__(self, registry: Optional[CollectorRegistry] = None):
        """
        Initialize the SearchMonitor with Prometheus metrics.

        Args:
            registry: A Prometheus CollectorRegistry instance for metrics collection
        """
        self.registry = registry or CollectorRegistry()

        self.subsets_counter = Counter(
            "balanced_subsets_examined",
            "Candidate subsets examined by balanced-set enumeration",
            registry=self.registry,
        )

        self.solves_counter = Counter(
            "feasibility_solves",
            "Exact phase-one feasibility solves",
            registry=self.registry,
        )

        self.pivots_counter = Counter(
            "simplex_pivots",
            "Rational pivots performed by the feasibility solver",
            registry=self.registry,
        )

        self.labelings_counter = Counter(
            "labelings_checked",
            "Vertex labelings checked by exhaustive lemma suites",
            registry=self.registry,
        )

        self.catalog_gauge = Gauge(
            "catalog_size",
            "Number of minimal balanced subsets in the last catalog",
            registry=self.registry,
        )

    def record_subsets(self, count: int = 1) -> None:
        """Add examined candidate subsets."""
        self.subsets_counter.inc(count)

    def record_solve(self, pivots: int) -> None:
        """
        Record one feasibility solve.

        Args:
            pivots: Number of pivots the solve performed
        """
        self.solves_counter.inc()
        self.pivots_counter.inc(pivots)

    def record_labelings(self, count: int = 1) -> None:
        """Add checked labelings."""
        self.labelings_counter.inc(count)

    def set_catalog_size(self, size: int) -> None:
        self.catalog_gauge.set(size)

    def value(self, sample_name: str) -> float:
        """
        Read one sample from the registry.

        Args:
            sample_name: Full sample name, e.g. ``feasibility_solves_total``

        Returns:
            The sample value, 0.0 if the sample does not exist
        """
        found = self.registry.get_sample_value(sample_name)
        return found if found is not None else 0.0

    def write(self, path: Path) -> None:
        """Write all metrics to ``path`` in the Prometheus text format."""
        write_to_textfile(str(path), self.registry)
