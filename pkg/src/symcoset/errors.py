"""Exception types shared across the package."""


class SymcosetError(Exception):
    """Base class for all package errors."""


class ParseError(SymcosetError, ValueError):
    def __init__(self, message: str, position: int = -1):
        super().__init__(message)
        self.position = position


class DegreeMismatch(SymcosetError, ValueError):
    pass


class CapExceeded(SymcosetError):
    """A size cap stopped a computation; ``value`` carries the exact size when known."""

    def __init__(self, message: str, value=None, cap=None):
        super().__init__(message)
        self.value = value
        self.cap = cap


class OrderExceedsCap(CapExceeded):
    pass


class OrbitExceedsCap(CapExceeded):
    pass


class IndexExceedsCap(CapExceeded):
    pass


class NoSylow7(SymcosetError):
    pass


class Unsupported(SymcosetError):
    pass


class UnknownTypeName(SymcosetError, KeyError):
    pass


class SubgroupNotContained(SymcosetError, ValueError):
    pass


class ConnectorNotInGroup(SymcosetError, ValueError):
    pass


class ConnectionSetNotSymmetric(SymcosetError, ValueError):
    pass


class IdentityInConnectionSet(SymcosetError, ValueError):
    pass


class NotRegular(SymcosetError, ValueError):
    pass


class DataIntegrityError(SymcosetError):
    pass
