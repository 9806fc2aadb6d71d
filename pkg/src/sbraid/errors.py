class SBraidError(Exception):
    """Base class for errors raised by this package."""


class ParseError(SBraidError, ValueError):
    pass


class NotPositive(SBraidError, ValueError):
    pass


class NonInvertible(SBraidError, ValueError):
    pass


class XLettersPresent(SBraidError, ValueError):
    pass


class ResourceLimit(SBraidError):
    """A configured resource bound was hit; the answer is unknown, not false."""


class CapExceeded(ResourceLimit):
    def __init__(self, message, partial=frozenset()):
        super().__init__(message)
        self.partial = partial


class BoundExceeded(ResourceLimit):
    pass
