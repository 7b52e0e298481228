"""Exception types shared across the package."""


class SharpBoundsError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SharpBoundsError, ValueError):
    """An argument lies outside the validity domain of the requested formula."""


class MissingParameterError(SharpBoundsError, TypeError):
    """An alpha-anchored bound was evaluated without alpha, or alpha was
    passed to a bound that does not take one."""


class VariantError(SharpBoundsError, ValueError):
    """A printed-form variant was requested for a bound that has only a
    single form."""


class PrecisionError(SharpBoundsError, ArithmeticError):
    """The requested enclosure width is not reachable at working precision."""


class SideMismatchError(SharpBoundsError, ValueError):
    """Two bounds do not bound the same target function from the same side."""


class ConfigError(SharpBoundsError, ValueError):
    """A sweep or certification configuration is invalid."""


class DegenerateDomainError(SharpBoundsError, ValueError):
    """The requested sweep domain has an empty interior."""


class UnknownChainError(SharpBoundsError, KeyError):
    """A chain id or chain variant is not present in the registry."""
