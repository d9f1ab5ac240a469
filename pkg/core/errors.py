"""Exception hierarchy. Anything deriving from BraidError is a domain error (CLI exit code 1)."""


class BraidError(Exception):
    """Base class for every failure the toolkit reports on purpose."""


class ConfigError(BraidError, ValueError):
    pass


class WordFormatError(BraidError, ValueError):
    """Malformed braid word text, or a letter index outside 1..n-1."""


class StrandCountError(BraidError, ValueError):
    """Mismatched strand counts, or a target braid group that is too small."""


class BudgetExceededError(BraidError, RuntimeError):
    def __init__(self, steps: int, budget: int, length: int):
        self.steps = steps
        self.budget = budget
        self.length = length
        super().__init__(
            f"handle reduction exceeded its budget of {budget} rewrites "
            f"(current word length {length}); raise the budget"
        )


class UnsupportedOperationError(BraidError):
    """Operation not offered for this subgroup (e.g. deciding a sample-only subgroup)."""


class PreconditionError(BraidError, ValueError):
    pass
