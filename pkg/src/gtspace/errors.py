"""Exception hierarchy shared by every module of the package."""


class GTSError(Exception):
    """Base class for all errors raised by gtspace."""


class DimensionMismatch(GTSError):
    pass


class DuplicateLabel(GTSError):
    pass


class InvalidLabel(GTSError):
    """A label is empty or contains whitespace."""


class DegreeOutOfRange(GTSError):
    pass


class IndexOutOfRange(GTSError, IndexError):
    pass


class PointSetMismatch(GTSError):
    """Two sets were compared over different point lists."""


class EmptyFamily(GTSError):
    pass


class PointLabelNotFound(GTSError):
    pass


class NotABijection(GTSError):
    pass


class IncompatibleWitness(GTSError):
    pass


class AdjointnessViolation(GTSError):
    """A candidate pair (f, f_bar) fails s(f(x), B) = r(x, f_bar(B))."""

    def __init__(self, point, open_, message=None):
        self.point = point
        self.open = open_
        super().__init__(
            message or f"adjointness fails at point {point}, open {open_}"
        )


class SearchSpaceTooLarge(GTSError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"search space of size {size} exceeds cap {cap}")


class LinkMismatch(GTSError):
    pass


class UnknownPointLabel(GTSError):
    pass


class NotAPermutation(GTSError):
    pass


class GTSSyntaxError(GTSError):
    """Malformed space document; carries a 1-based line and column."""

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"line {line}, col {col}: {message}")
