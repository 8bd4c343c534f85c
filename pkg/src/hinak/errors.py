"""Exception types shared across the package."""


class HinakError(Exception):
    """Base class for every error raised by this package."""


class BadArity(HinakError):
    """A tuple has the wrong length, or a dimension parameter is invalid."""


class NotIncreasing(HinakError):
    """A label is not strictly increasing."""


class NonPeriodicKupisch(HinakError):
    """The cyclic inequalities 1 <= ell_i <= ell_{i-1} + 1 fail somewhere."""


class Disconnected(HinakError):
    """Some ell_i <= 1; only connected series define a supported algebra."""


class OutOfRange(HinakError):
    """An index is outside the range it is required to lie in."""


class NotCTLabel(HinakError):
    """A tuple is not a canonical cluster-tilting label of the algebra."""


class ProjectiveInput(HinakError):
    """The higher translate is undefined on projective modules."""


class Mismatch(HinakError):
    """Two basis morphisms are not composable."""


class NotInI(HinakError):
    """An integer does not belong to the cycle index set I."""


class NonConstantDerivedKupisch(HinakError):
    """The derived series came out non-constant; this signals a bug."""


class TrivialSingularity(HinakError):
    """The singularity category vanishes, so the requested data is empty."""


class NotInWide(HinakError):
    """A label has a coordinate outside the cycle index set I."""


class NotVertex(HinakError):
    """A tuple is not a canonical quiver vertex of the algebra."""


class BadPrime(HinakError):
    """The requested field characteristic is not prime."""


class CoverNotSurjective(HinakError):
    """A constructed projective cover failed its surjectivity rank check."""


class SemisimpleLambda(HinakError):
    """Periodicity verification is undefined over a semisimple algebra."""


class PeriodicityFailed(HinakError):
    """No uniform twist direction matched every simple; signals a bug."""


class AmbiguousIdentification(HinakError):
    """Two distinct labels share a dimension vector on this algebra."""
