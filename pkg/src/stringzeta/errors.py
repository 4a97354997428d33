"""Exception hierarchy shared by every module."""


class StringZetaError(Exception):
    """Base class for all errors raised by this package."""


class PresentationError(StringZetaError):
    """Malformed presentation input.

    ``location`` names the offending line/field when it is known.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class ParseError(PresentationError):
    pass


class UnknownNameError(PresentationError):
    pass


class DuplicateNameError(PresentationError):
    pass


class EndpointError(PresentationError):
    """A binomial relation whose two paths do not share source and target."""


class ValidationError(StringZetaError):
    """The input is well formed but not admissible (or not a string algebra)."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class PreconditionError(StringZetaError, ValueError):
    pass


class ResourceLimitError(StringZetaError):
    pass


class InternalConsistencyError(StringZetaError):
    """Two independent computations disagreed. Always a bug, never bad input."""


class ConvergenceError(StringZetaError):
    """A numerical root finder missed its residual target."""
