"""Exception hierarchy shared by all modules."""


class FriezeError(Exception):
    pass


class DescriptorMismatch(FriezeError, TypeError):
    pass


class DimensionMismatch(FriezeError, ValueError):
    pass


class NotInvertible(FriezeError, ZeroDivisionError):
    """Raised when an element (or a named subexpression) has no inverse."""

    def __init__(self, message, subexpr=None):
        super().__init__(message)
        self.subexpr = subexpr


class SubmatrixNotInvertible(NotInvertible):
    pass


class ExprSyntaxError(FriezeError, ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownSymbol(FriezeError, ValueError):
    pass


class UnboundSymbol(FriezeError, KeyError):
    pass


class RetriesExhausted(FriezeError, RuntimeError):
    pass


class GenerationFailed(FriezeError, RuntimeError):
    pass


class ClosureViolation(FriezeError, ValueError):
    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class LocalRelationViolation(FriezeError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstraintViolated(FriezeError, ValueError):
    pass
