"""
Test suite for runtime settings.
"""

import pytest

from src.config import Settings
from src.errors import InputError


def test_defaults():
    settings = Settings()

    assert settings.enumeration_budget == 10_000_000
    assert settings.labeling_budget == 10_000_000
    assert settings.max_theorem1_d == 7
    assert settings.brute_force_max_points == 12


def test_from_env_without_overrides():
    assert Settings.from_env({}) == Settings()


def test_from_env_overrides():
    settings = Settings.from_env(
        {
            "BALANCED_MAX_THEOREM1_D": "8",
            "BALANCED_LABELING_BUDGET": "500",
            "OTHER": "x",
        }
    )

    assert settings.max_theorem1_d == 8
    assert settings.labeling_budget == 500
    assert settings.enumeration_budget == 10_000_000


def test_from_env_reads_process_environment(monkeypatch):
    monkeypatch.setenv("BALANCED_BRUTE_FORCE_MAX_POINTS", "14")

    assert Settings.from_env().brute_force_max_points == 14


@pytest.mark.parametrize(
    "raw, message",
    [
        ("ten", "BALANCED_ENUMERATION_BUDGET must be an integer"),
        ("1.5", "must be an integer"),
        ("0", "must be positive"),
        ("-4", "must be positive"),
    ],
)
def test_from_env_rejects(raw, message):
    with pytest.raises(InputError, match=message):
        Settings.from_env({"BALANCED_ENUMERATION_BUDGET": raw})
