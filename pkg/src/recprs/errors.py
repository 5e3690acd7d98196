"""Exception hierarchy shared by every module of the package."""


class RecPrsError(Exception):
    """Base class; ``code`` is the machine-readable reason used in reports."""

    code = "ERROR"


class ZeroDivisor(RecPrsError, ZeroDivisionError):
    code = "ZERO_DIVISOR"


class ZeroPolynomial(RecPrsError, ValueError):
    code = "ZERO_POLYNOMIAL"


class ZeroInput(RecPrsError, ValueError):
    code = "ZERO_INPUT"


class NotSquare(RecPrsError, ValueError):
    code = "NOT_SQUARE"


class TooLarge(RecPrsError, ValueError):
    code = "TOO_LARGE"


class SingularPivot(RecPrsError, ArithmeticError):
    code = "SINGULAR_PIVOT"


class SingularU(RecPrsError, ArithmeticError):
    """The shared leading block of the bordered determinants is singular."""

    code = "SINGULAR_U"


class DegenerateDegrees(RecPrsError, ValueError):
    code = "DEGENERATE_DEGREES"


class IndexOutOfRange(RecPrsError, IndexError):
    code = "INDEX_OUT_OF_RANGE"


class BadChain(RecPrsError, ValueError):
    code = "BAD_CHAIN"


class Incomplete(RecPrsError, ValueError):
    code = "INCOMPLETE"


class VanishingLeading(RecPrsError, ArithmeticError):
    code = "VANISHING_LEADING"


class LayoutUnresolved(RecPrsError, RuntimeError):
    code = "LAYOUT_UNRESOLVED"


class ParseError(RecPrsError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
