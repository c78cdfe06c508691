"""Exception hierarchy shared by every geodesy module."""


class GeodesyError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""


class ParseError(GeodesyError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVertexError(GeodesyError):
    pass


class NoPathError(GeodesyError):
    pass


class CapExceededError(GeodesyError):
    """Raised by enumerations that hit their cap; ``count`` is the partial count."""

    def __init__(self, message, count):
        self.count = count
        super().__init__(message)


class NotApplicableError(GeodesyError):
    pass


class BudgetExceededError(GeodesyError):
    def __init__(self, message, estimate):
        self.estimate = estimate
        super().__init__(message)


class GadgetNotFoundError(GeodesyError):
    pass


class QuantizationError(GeodesyError):
    pass


class NoFillingError(GeodesyError):
    pass


class NotACycleError(GeodesyError):
    pass
