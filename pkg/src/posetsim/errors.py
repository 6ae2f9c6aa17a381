"""Exception hierarchy shared by every module of the package."""


class PosetSimError(Exception):
    """Base class for all errors raised by posetsim."""


class InvariantViolation(PosetSimError, ValueError):
    """A value does not satisfy the invariants of its shape."""


class EmptyClass(InvariantViolation):
    pass


class DuplicateElement(InvariantViolation):
    pass


class UnsupportedRelation(PosetSimError, ValueError):
    """The requested relation kind is not defined for the given shape."""


class OrderMismatch(PosetSimError, ValueError):
    pass


class UniverseMismatch(PosetSimError, ValueError):
    pass


class UnknownElement(PosetSimError, KeyError):
    pass


class UndefinedMeasure(PosetSimError, ArithmeticError):
    """A measure has a zero denominator and no convention was requested."""


class NoCommonElements(UndefinedMeasure):
    pass


class TooFewElements(UndefinedMeasure):
    pass


class ShapeMismatch(PosetSimError, TypeError):
    pass


class ParseError(PosetSimError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
