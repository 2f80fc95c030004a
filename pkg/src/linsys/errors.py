"""Exception types raised across the package."""


class LinsysError(Exception):
    """Base class for all errors raised by linsys."""


class ParseError(LinsysError):
    """Base class for matrix-text parsing failures."""


class EmptyInputError(ParseError):
    """The matrix text contained no entries."""


class RaggedRowsError(ParseError):
    """Rows of the matrix text had differing entry counts."""

    def __init__(self, row: int, got: int, expected: int):
        self.row = row
        self.got = got
        self.expected = expected
        super().__init__(
            f"row {row + 1} has {got} entries, expected {expected}"
        )


class BadNumberError(ParseError):
    """A token in the matrix text is not a valid number."""

    def __init__(self, token: str, row: int, col: int):
        self.token = token
        self.row = row
        self.col = col
        what = repr(token) if token else "empty entry"
        super().__init__(f"{what} at row {row + 1}, column {col + 1} is not a number")


class NonFiniteEntryError(LinsysError):
    """An operation would store a NaN or infinite value."""


class NotSquareError(LinsysError):
    """A square matrix was required."""


class IndexOutOfRangeError(LinsysError, IndexError):
    """A row or column index is out of range."""


class LengthMismatchError(LinsysError, ValueError):
    """A vector length does not match the matrix dimension."""


class ZeroScaleFactorError(LinsysError, ValueError):
    """Scaling a row by zero is not an elementary operation."""


class ZeroDiagonalError(LinsysError):
    """The coefficient matrix has a zero diagonal entry, so the
    iteration is not defined without pivoting."""


class NonFiniteIterateError(LinsysError):
    """A sweep overflowed to a non-finite iterate."""
