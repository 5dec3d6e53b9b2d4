"""Exception hierarchy shared by all modules."""


class HomexError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HomexError, ValueError):
    """Malformed input: a face with repeated vertices, an apex collision, a bad file line."""


class DomainError(HomexError, ValueError):
    """Parameters outside the range where a bound or construction is defined."""


class PreconditionError(HomexError):
    """An operation was called on input violating its stated hypothesis."""


class NotStronglyConnectedError(PreconditionError):
    def __init__(self, message, components):
        super().__init__(message)
        self.components = components


class ExpansionError(HomexError, ValueError):
    """An expansion operation does not fit the complex it is applied to."""


class CapacityError(HomexError):
    """The exhaustive search was asked to go beyond its configured vertex cap."""


class ConsistencyError(HomexError, AssertionError):
    """Two independent computations disagreed; indicates a bug, not bad input."""
