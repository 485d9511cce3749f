from typing import Optional


class LefschetzError(Exception):
    """Base class for every error raised by the library"""

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self) -> str:
        if self.offset is not None:
            return f"{type(self).__name__} at offset {self.offset}: {self.message}"
        return f"{type(self).__name__}: {self.message}"


class DimensionMismatchError(LefschetzError, ValueError):
    pass


class NonSymmetricError(LefschetzError, ValueError):
    pass


class NotSymplecticError(LefschetzError, ValueError):
    pass


class NonPrimitiveVectorError(LefschetzError, ValueError):
    pass


class SideGenusOutOfRangeError(LefschetzError, ValueError):
    pass


class GenusMismatchError(LefschetzError, ValueError):
    pass


class WordSyntaxError(LefschetzError, ValueError):
    pass


class IndexOutOfRangeError(LefschetzError, ValueError):
    pass


class InverseInPositivePartError(LefschetzError, ValueError):
    pass


class FibrationFileError(LefschetzError, ValueError):
    """Malformed fibration file; `line` is 1-based"""

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        super().__init__(message, offset)
        self.line = line

    def __str__(self) -> str:
        where = f" (line {self.line})" if self.line is not None else ""
        return f"{super().__str__()}{where}"


class FlatPairCountMismatchError(LefschetzError, ValueError):
    pass


class BaseGenusTooSmallError(LefschetzError, ValueError):
    pass


class HypothesisViolationError(LefschetzError, ValueError):
    """The theorem being evaluated asserts nothing for these parameters"""


class ParameterRangeError(LefschetzError, ValueError):
    pass
