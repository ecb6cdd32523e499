"""Exception types shared across the package."""


class FMPartnersError(Exception):
    """Base class for every error this package raises deliberately."""


class GroupTooLarge(FMPartnersError):
    """A discriminant group exceeded the configured enumeration cap."""


class OddLatticeUnsupported(FMPartnersError):
    """Genus comparison is only implemented for even lattices."""


class NonIntegralResult(FMPartnersError):
    """A quantity that must be an integer came out fractional."""


class NotSL2(FMPartnersError):
    """A 2x2 integer matrix was required to have determinant 1."""


class CoprimalityViolated(FMPartnersError):
    """Relative-Jacobian twist data must be coprime to the fibre-degree gcd."""


class HypothesisViolated(FMPartnersError):
    """The requested conclusion is not available for the given surface data."""


class NoValidShift(FMPartnersError):
    """No shift of the Bezout pair makes the matrix entry divisible as required."""


class MissingField(FMPartnersError):
    """A surface descriptor lacks a field required for the requested operation."""
