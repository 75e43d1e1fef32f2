class FeasibilityError(Exception):
    """Base class of every error raised by the analyzer."""


class InputError(FeasibilityError, ValueError):
    """Malformed input: vertices, graph specs, matrices or files."""


class UnsupportedOperationError(InputError):
    """The operation is not defined for the given arguments."""


class UnderdeterminedError(InputError):
    """The quotient matrix does not determine the class sizes."""


class BudgetExceededError(FeasibilityError):
    """An exhaustive operation would enumerate more vertices than allowed."""

    def __init__(self, count: "int | str", budget: int):
        self.count = count
        self.budget = budget
        super().__init__(
            f"Enumeration of {count} vertices exceeds the budget of {budget}."
        )


class ConsistencyError(FeasibilityError, AssertionError):
    """An internal invariant does not hold."""
