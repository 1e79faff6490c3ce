"""Exception types shared across the package."""


class SSGenus4Error(Exception):
    """Base class for all package-specific errors."""


class EvenDegreeError(SSGenus4Error, ValueError):
    """Extension degree n must be odd."""


class DegreeOutOfRangeError(SSGenus4Error, ValueError):
    """Extension degree n must satisfy 3 <= n <= 63."""


class WrongDegreeError(SSGenus4Error, ValueError):
    """Modulus is not monic of exact degree n."""


class ReducibleModulusError(SSGenus4Error, ValueError):
    """Modulus factors over GF(2)."""


class NotPrimitiveError(SSGenus4Error, ValueError):
    """Supplied generator has multiplicative order smaller than 2^n - 1."""


class FieldTooLargeError(SSGenus4Error, ValueError):
    """Operation requires a brute-force pass that is capped at a smaller field."""


class FieldTooLargeForExhaustiveSumError(FieldTooLargeError):
    """Exhaustive 2^n loop exceeds the configured cap."""


class InvalidParamsError(SSGenus4Error, ValueError):
    """Curve parameters violate a precondition (e.g. leading coefficient zero)."""


class NotGenusFourError(SSGenus4Error, ValueError):
    """Degree-9 coefficient vanishes, so the model drops below genus 4."""


class MalformedWeilPolyError(SSGenus4Error, ValueError):
    """Integer polynomial violates the Frobenius functional equation."""


class NotReducibleError(SSGenus4Error, ValueError):
    """Eigenvalue-pair sums are not divisible by the required 2-power."""


class ZeroPolynomialError(SSGenus4Error, ValueError):
    """Resultant of the zero polynomial is undefined."""
