"""Exception hierarchy shared by every module."""


class PosBasisError(Exception):
    """Base class for all errors raised by this package."""


class InvalidScalar(PosBasisError, ValueError):
    pass


class DimensionMismatch(PosBasisError, ValueError):
    pass


class PreconditionViolated(PosBasisError, ValueError):
    pass


class DuplicateParameter(PosBasisError, ValueError):
    pass


class DimensionTooSmall(PosBasisError, ValueError):
    pass


class SizeExceeded(PosBasisError, ValueError):
    """Raised by the Fourier-Motzkin oracle when an input exceeds its guard."""


class ObjectiveFailure(PosBasisError, ArithmeticError):
    """The objective callback returned a non-finite value."""


class ParseError(PosBasisError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
