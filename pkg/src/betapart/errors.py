"""Exception hierarchy shared by every module of the package."""


class BetaPartitionError(Exception):
    """Base class for all errors raised by :mod:`betapart`."""


class DomainError(BetaPartitionError, ValueError):
    """An argument lies outside the domain of the operation."""


class DivisionByZero(BetaPartitionError, ZeroDivisionError):
    pass


class ReducibleError(DomainError):
    """The quadratic polynomial is reducible over the rationals."""


class RegimeError(BetaPartitionError):
    """The base admits elements with infinitely many partitions."""


class ResourceError(BetaPartitionError):
    """A search exceeded its node, depth or degree cap."""


class ConsistencyError(BetaPartitionError):
    """Two routes that must agree did not; indicates an arithmetic bug."""
