"""Exception types raised across the package."""


class LatticeGBError(Exception):
    """Base class for all errors raised by latticegb."""


class ZeroVectorError(LatticeGBError, ValueError):
    """A binomial was requested for the zero vector."""


class DimensionMismatchError(LatticeGBError, ValueError):
    pass


class NotHomogeneousError(LatticeGBError, ValueError):
    """Some input vectors are not homogeneous for the grading.

    The offending vectors are kept in ``offenders``.
    """

    def __init__(self, offenders, message=None):
        self.offenders = [tuple(v) for v in offenders]
        if message is None:
            shown = ", ".join(str(v) for v in self.offenders[:5])
            more = "" if len(self.offenders) <= 5 else f" (+{len(self.offenders) - 5} more)"
            message = f"{len(self.offenders)} inhomogeneous vector(s): {shown}{more}"
        super().__init__(message)


class ExponentOverflowError(LatticeGBError, OverflowError):
    pass


class DegreeOutOfRangeError(LatticeGBError, ValueError):
    pass


class EnumerationLimitError(LatticeGBError, RuntimeError):
    pass


class ParseError(LatticeGBError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
