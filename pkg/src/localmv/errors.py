"""Exception hierarchy shared by every module of the package."""


class MVError(Exception):
    """Base class for all errors raised by :mod:`localmv`."""


class ElementError(MVError, ValueError):
    """An element does not belong to the algebra it was used with."""


class UnsupportedAlgebraError(MVError):
    """The operation is not defined for this kind of algebra."""


class InfiniteAlgebraError(UnsupportedAlgebraError):
    """The operation needs to enumerate the carrier, which is infinite."""


class NotLocalError(MVError):
    """The algebra is not local (or is trivial) where a local one is needed."""


class PreconditionError(MVError, ValueError):
    pass


class SearchBoundExceeded(MVError):
    """An exhaustive search would visit more candidates than allowed."""


class AnomalyError(MVError):
    """A property the theory guarantees was observed to fail.

    Raised instead of silently picking a value, so that a broken invariant
    surfaces at the call site.
    """


class ParseError(MVError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
