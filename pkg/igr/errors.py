class IgrError(Exception):
    """Base class for every error raised by the igr package."""


class RankMismatch(IgrError, ValueError):
    pass


class NotDominant(IgrError, ValueError):
    pass


class PreconditionError(IgrError, ValueError):
    """An operation was called outside the range where it is defined."""


class ParseError(IgrError, ValueError):
    pass
