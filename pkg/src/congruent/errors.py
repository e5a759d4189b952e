"""Exception hierarchy shared by every module and rendered by the CLI."""


class CongruentError(Exception):
    """Base class for domain errors; ``code`` is the name used in JSON output."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ZeroDenominator(CongruentError, ZeroDivisionError):
    pass


class UndefinedForZero(CongruentError, ValueError):
    pass


class NegativeInput(CongruentError, ValueError):
    pass


class NotASquare(CongruentError, ValueError):
    pass


class NonPositiveRadicand(NotASquare):
    pass


class ParseError(CongruentError, ValueError):
    pass


class InvalidCurve(CongruentError, ValueError):
    pass


class NotOnCurve(CongruentError, ValueError):
    pass


class InvariantViolation(CongruentError, ValueError):
    pass


class ZeroY(CongruentError, ValueError):
    pass


class DegenerateTriple(CongruentError, ValueError):
    pass


class TorsionInput(CongruentError, ValueError):
    pass


class StepCapExceeded(CongruentError):
    pass


class NoTripleFound(CongruentError):
    pass
