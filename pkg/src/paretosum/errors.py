"""Exception hierarchy shared by all modules."""


class ParetoSumError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(ParetoSumError, ValueError):
    pass


class InvariantError(ParetoSumError, ValueError):
    """A point list violates the Pareto-set ordering or magnitude cap."""


class ParseError(ParetoSumError, ValueError):
    pass


class RangeTooSmall(ParetoSumError, ValueError):
    pass


class BudgetExceeded(ParetoSumError, MemoryError):
    pass


class MonotonicityViolated(ParetoSumError, ValueError):
    pass


class ConvexityViolated(ParetoSumError, ValueError):
    pass


class ConfigError(ParetoSumError, ValueError):
    pass
