"""
Exception hierarchy shared by every module.
The CLI maps these onto its exit codes.
"""

from typing import Any, Optional, Sequence


class InputError(ValueError):
    """Raised for malformed input: bad documents, out-of-range elements, duplicates."""


class HypothesisError(InputError):
    """Raised when a lemma's stated hypothesis does not hold for the given complex."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"{check}: {detail}")
        self.check = check
        self.detail = detail


class BudgetExceededError(RuntimeError):
    """
    Raised when a search exceeds its configured budget.

    Partial results are attached for diagnostics only and must not be treated
    as a complete answer.
    """

    def __init__(
        self,
        message: str,
        examined: int,
        budget: int,
        partial: Optional[Sequence[Any]] = None,
    ):
        super().__init__(f"{message} (examined {examined}, budget {budget})")
        self.examined = examined
        self.budget = budget
        self.partial = tuple(partial or ())
        self.partial_valid = False


class CoreDisagreementError(RuntimeError):
    """Raised when the direct and the classification-based core checks disagree."""

    def __init__(self, direct: Any, theorem1: Any):
        super().__init__(
            "core checkers disagree: "
            f"direct nonempty={direct.nonempty}, theorem1 nonempty={theorem1.nonempty}"
        )
        self.direct = direct
        self.theorem1 = theorem1
