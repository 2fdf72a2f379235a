"""Exception types shared across the package."""


class LieTripleError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(LieTripleError):
    """Operands are not dimensioned for the same algebra."""


class GroupMismatchError(LieTripleError):
    """Group elements belong to different groups."""


class MembershipError(LieTripleError):
    """A matrix fails the group membership test."""


class RepresentationError(LieTripleError):
    """A matrix does not lie in the span of the generator basis."""


class TangencyError(LieTripleError):
    """A matrix is not tangent to the group at the given point."""


class ProjectionMismatchError(LieTripleError):
    """Paired bundle points do not share the required projection."""


class HyperregularityError(LieTripleError):
    """The Legendre map of the supplied Lagrangian is not invertible."""


class DegenerateInertiaError(LieTripleError):
    """An inertia form is singular where definiteness is required."""


class NumericalError(LieTripleError):
    """An iterative numerical procedure failed to converge."""


class ConfigError(LieTripleError):
    """A configuration document is malformed or inconsistent."""
