"""Exception taxonomy shared across the package."""


class UsageError(ValueError):
    """An operation was called with arguments violating its precondition."""


class ConfigError(ValueError):
    """A configuration value or schedule violates a documented constraint.

    Carries the full list of violations when several are found at once.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ResourceError(RuntimeError):
    """A requested computation exceeds a configured resource cap."""


class ProtocolError(RuntimeError):
    """Online predict/feed alternation was violated."""


class NumericError(ArithmeticError):
    """A numeric computation lost all precision (e.g. total weight underflow)."""
