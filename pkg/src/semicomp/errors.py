"""Exception types shared by the whole package."""


class SemigroupError(Exception):
    """Base class for all errors raised by semicomp."""


class ArgError(SemigroupError, ValueError):
    """An argument is outside the accepted domain."""


class RangeError(SemigroupError, ValueError):
    """A table or map entry falls outside ``[0, order)``."""

    def __init__(self, row, col, value, bound=None):
        self.row, self.col, self.value = row, col, value
        msg = f"entry ({row}, {col}) = {value} out of range"
        if bound is not None:
            msg += f" [0, {bound})"
        super().__init__(msg)


class AssocError(SemigroupError, ValueError):
    """Associativity fails; ``triple`` is the first violating (x, y, z)."""

    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__(f"not associative: (xy)z != x(yz) at x={x}, y={y}, z={z}")


class DegreeMismatch(SemigroupError, ValueError):
    pass


class SizeExceeded(SemigroupError):
    """A construction would grow past its size cap."""

    def __init__(self, limit, what="elements"):
        self.limit = limit
        super().__init__(f"more than {limit} {what}")
