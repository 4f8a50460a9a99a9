"""Exception types shared across the package."""


class IdealSpacesError(Exception):
    """Base class for all package errors."""


class InvalidSize(IdealSpacesError):
    """Requested ring size is not supported (size-1 rings are rejected)."""


class InvalidArity(IdealSpacesError):
    """An operation received an empty or malformed argument list."""


class RingAxiomError(IdealSpacesError):
    """Operation tables violate the commutative-ring-with-identity axioms."""


class ImproperIdeal(IdealSpacesError):
    """A proper ideal was required but the whole ring was supplied."""


class ZeroInMultiplicativeSet(IdealSpacesError):
    """Localizing at a set containing zero would collapse the ring."""


class MixedRings(IdealSpacesError):
    """Ideal arithmetic applied to ideals of different rings."""


class CapExceeded(IdealSpacesError):
    """An enumeration exceeded its configured cap; never silently truncated."""


class ParseError(IdealSpacesError):
    """Ring expression could not be parsed.

    Carries the offending position so the CLI can point at it.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class HypothesisViolated(IdealSpacesError):
    """A construction's hypothesis does not hold; the message names it."""


class NoPartitionFound(IdealSpacesError):
    """No decomposition 1 = x + y with x, y in the given ideal pair exists."""
