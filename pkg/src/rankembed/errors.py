"""Exception types shared across the package."""


class RankembedError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(RankembedError):
    """An exhaustive enumeration would exceed the configured candidate budget."""

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} candidates, budget is {budget}")


class InconsistentInstanceError(RankembedError):
    """A syndrome decoding instance has no solution at all."""


class CodeFileError(RankembedError):
    """A code file does not conform to the expected format."""
