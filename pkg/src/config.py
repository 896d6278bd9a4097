"""
Runtime settings: search budgets and verification ceilings.
Defaults can be overridden through environment variables.
"""

import logging
import os
from dataclasses import dataclass, fields
from typing import Mapping, Optional

from src.errors import InputError

logger = logging.getLogger(__name__)

ENV_PREFIX = "BALANCED_"


@dataclass(frozen=True)
class Settings:
    """Budgets shared by the enumerators and the exhaustive suites."""

    enumeration_budget: int = 10_000_000
    labeling_budget: int = 10_000_000
    max_theorem1_d: int = 7
    brute_force_max_points: int = 12

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings from environment overrides.

        Each field maps to ``BALANCED_<FIELD_NAME>`` in upper case, e.g.
        ``BALANCED_ENUMERATION_BUDGET``.

        Args:
            environ: Mapping to read from; defaults to ``os.environ``

        Returns:
            Settings with any overrides applied

        Raises:
            InputError: If an override is not a positive integer
        """
        environ = os.environ if environ is None else environ
        overrides = {}
        for field in fields(cls):
            key = ENV_PREFIX + field.name.upper()
            raw = environ.get(key)
            if raw is None:
                continue
            try:
                value = int(raw)
            except ValueError as e:
                logger.error("Invalid integer in %s: %r", key, raw)
                raise InputError(f"{key} must be an integer, got {raw!r}") from e
            if value <= 0:
                raise InputError(f"{key} must be positive, got {value}")
            overrides[field.name] = value
            logger.info("Using %s=%d from environment", key, value)
        return cls(**overrides)
