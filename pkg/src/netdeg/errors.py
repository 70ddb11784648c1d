"""Exception types raised across the package."""


class NetdegError(Exception):
    """Base class for all library errors."""


class NotRealizable(NetdegError, ValueError):
    """The sequence has no realization of the requested kind.

    ``violation`` carries the failed constraint when one is known.
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class PreconditionFailed(NetdegError, ValueError):
    pass


class BoundExceeded(NetdegError, ValueError):
    pass


class DomainRestricted(NetdegError, ValueError):
    pass


class NotWidth2Poset(NetdegError, ValueError):
    pass
