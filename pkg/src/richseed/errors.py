"""Exception types shared across the package."""


class RichseedError(Exception):
    """Base class for all errors raised by this package."""


class IllegalType(RichseedError, ValueError):
    """Requested Dynkin type does not exist (e.g. D3, E9, rank 0)."""


class NotReduced(RichseedError, ValueError):
    """A word is not reduced.

    ``prefix_len`` is the length of the shortest non-reduced prefix
    (letters are counted from the right, i.e. in application order).
    """

    def __init__(self, prefix_len: int, message: str | None = None):
        self.prefix_len = prefix_len
        super().__init__(message or f"word is not reduced (prefix of length {prefix_len})")


class NotLessOrEqual(RichseedError, ValueError):
    """v is not below w in the Bruhat order."""


class NegativeCoordinate(RichseedError, ValueError):
    """A coefficient that must be a nonnegative integer came out negative."""


class FrozenVertex(RichseedError, ValueError):
    """Attempted mutation at a frozen vertex."""


class AmbiguousBranch(RichseedError, RuntimeError):
    """Both exchange computations gave nonnegative, distinct vectors."""


class NoValidBranch(RichseedError, RuntimeError):
    """Neither exchange computation gave a nonnegative vector."""


class InvariantViolation(RichseedError, RuntimeError):
    """A structural property that the algorithm guarantees failed to hold."""


class Unclassifiable(RichseedError, ValueError):
    """Local arrow pattern matches none of the known configurations."""
