"""Exception hierarchy. Every error raised by the package derives from ScsaError."""


class ScsaError(Exception):
    """Base class for all package errors."""


class InvalidDomainError(ScsaError, ValueError):
    pass


class InvalidParameterError(ScsaError, ValueError):
    pass


class ParseError(ScsaError, ValueError):
    pass


class NonEquidistantGridError(ScsaError, ValueError):
    pass


class NonSymmetricInputError(ScsaError, ValueError):
    pass


class NoConvergenceError(ScsaError, ArithmeticError):
    pass


class NegativeSignalError(ScsaError, ValueError):
    """The Schrodinger potential needs a nonnegative signal; shift it first."""


class LengthMismatchError(ScsaError, ValueError):
    pass


class ZeroSignalError(ScsaError, ValueError):
    pass


class TargetCountUnreachableError(ScsaError, ValueError):
    pass


class OutOfRangeError(ScsaError, ValueError):
    pass


class GridTooCoarseError(ScsaError, ValueError):
    pass


class DeterminantDegenerateError(ScsaError, ArithmeticError):
    pass
