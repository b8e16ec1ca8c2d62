"""Exception hierarchy for the semi-bandit toolkit."""

from typing import Optional


class SemiBanditError(Exception):
    """Base class for all errors raised by the toolkit."""


class InvalidSolutionError(SemiBanditError, ValueError):
    """A solution references items outside the ground set or is malformed."""


class UninitializedAgentError(SemiBanditError, RuntimeError):
    """The agent state has items that were never observed."""


class InvalidObservationError(SemiBanditError, ValueError):
    """An observed weight lies outside [0, 1]."""


class NonCoveringOracleError(SemiBanditError, RuntimeError):
    """Init could not make progress because the oracle never covers some item."""


class DimensionError(SemiBanditError, ValueError):
    """A weight vector does not match the size of the ground set."""


class InvalidWeightsError(SemiBanditError, ValueError):
    """Oracle input weights are negative or not finite."""


class InvalidInstanceError(SemiBanditError, ValueError):
    """Problem parameters violate the construction's preconditions."""


class ResourceLimitError(SemiBanditError, ValueError):
    """A request would exceed the sizes supported for enumeration."""


class ParameterError(SemiBanditError, ValueError):
    """A bound evaluator received missing or out-of-range parameters."""


class ConfigError(SemiBanditError, ValueError):
    """An experiment configuration or input file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None,
                 source: Optional[str] = None):
        self.line = line
        self.source = source
        prefix = ""
        if source is not None:
            prefix = f"{source}:"
        if line is not None:
            prefix = f"{prefix}{line}:" if prefix else f"line {line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)
        self.message = message
