"""Exception hierarchy.

Two families: ``InputError`` for malformed or out-of-contract input
(netlists, grids, files, component values) and ``NumericalError`` for
failures that arise while computing on valid input. The command line maps
them to exit codes 2 and 3.
"""


class BridgedTError(Exception):
    """Base class for every error raised by this package."""


class InputError(BridgedTError, ValueError):
    pass


class NumericalError(BridgedTError, ArithmeticError):
    pass


# polynomials / rational functions
class ZeroPolynomial(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class DivisionByZeroFunction(NumericalError, ZeroDivisionError):
    pass


# two-port algebra
class ZeroBranch(NumericalError):
    pass


class OpenSeriesBranch(NumericalError):
    pass


class SingularDenominator(NumericalError):
    pass


class NoThroughPath(NumericalError):
    pass


class FloatingNode(NumericalError):
    pass


class SingularAtFrequency(NumericalError):
    pass


class DenominatorZero(NumericalError):
    pass


class DesignInfeasible(NumericalError):
    pass


class NoCrossing(NumericalError):
    pass


# input validation
class NonPositiveValue(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicatePort(ParseError):
    pass


class MissingPort(ParseError):
    pass


class TopologyError(InputError):
    """The circuit is not the bridged-T topology a closed-form path needs."""


class UnsupportedFormat(InputError):
    pass


class OutOfRange(InputError):
    pass


class MultipleCrossingsWarning(UserWarning):
    """A magnitude trace crosses the requested level more than once."""
