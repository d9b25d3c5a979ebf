"""Exception types shared across the package."""


class TorusFixError(Exception):
    """Base class for all package-specific errors."""


class NonIntegralError(TorusFixError):
    """A derived characteristic polynomial has non-integer coefficients,
    so the input cannot come from a lattice-preserving endomorphism."""


class InvalidStructureError(TorusFixError):
    """A quartic fails the conjugate-pair root structure required of the
    rational representation of a torus endomorphism."""


class InvalidEndomorphismError(TorusFixError):
    """A unit-circle root is not a root of unity, certifying that the
    input is not realizable by a torus endomorphism."""


class NotDivisionAlgebraError(TorusFixError):
    """An element-level contradiction shows the chosen quaternion symbol
    does not define a division algebra."""


class ZeroNormError(NotDivisionAlgebraError):
    """A non-zero quaternion element has reduced norm zero."""


class ZeroEndomorphismError(TorusFixError):
    """The zero endomorphism has no meaningful fixed-point behaviour."""
