"""Exception types shared across the package."""


class PolygfError(Exception):
    """Base class for all package errors."""


class DomainError(PolygfError):
    """An argument violates a function's domain (pole proximity, wrong cone, ...)."""


class PoleError(DomainError):
    """Evaluation requested too close to a pole or a theta zero."""


class ConvergenceError(PolygfError):
    """A truncated series cannot be certified at the requested precision."""


class PrecisionError(PolygfError):
    """A result would escape the working precision (overflow / NaN)."""


class ConfigError(PolygfError):
    """Bad harness configuration (seed, tolerance, matrix panel, ...)."""
