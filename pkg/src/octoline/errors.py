"""Exception types raised across the package.

Every error derives from OctolineError so callers can catch the whole
family with one clause. Names state the violated precondition.
"""


class OctolineError(Exception):
    """Base class for all octoline errors."""


class ZeroDivisor(OctolineError, ZeroDivisionError):
    """Inverse or right division requested for a zero element."""


class NotNull(OctolineError):
    """Matrix fails the zero-determinant requirement."""


class NotFuturePointing(OctolineError):
    """Matrix trace is not positive, so no future-pointing factorization exists."""


class NotWellDefined(OctolineError):
    """The two parenthesizations of a sandwich product disagree."""


class NotCompatible(OctolineError):
    """Matrix entries leave the compatibility class needed for spinor transport."""


class NegativeDeterminant(OctolineError):
    """A square root of a negative determinant was requested."""


class NotComplex(OctolineError):
    """Matrix entries do not lie in a single complex subalgebra."""


class DegenerateMap(OctolineError):
    """Fractional-linear map sends a point to the undefined 0/0 case."""


class InvalidPoint(OctolineError):
    """Projective representative (0, 0) carries no point."""


class InvalidEll(OctolineError):
    """Doubling unit fails the orthogonality required by a nested form."""


class NotOrthogonal(OctolineError):
    """Pair of directions is not perpendicular where the construction needs it."""


class PoleHit(OctolineError):
    """Conformal map evaluated at its pole."""


class ZeroParameter(OctolineError):
    """A map parameter that must be invertible is zero."""


class WordTooLong(OctolineError):
    """Bracketing enumeration requested beyond the supported word length."""


class MalformedTable(OctolineError):
    """Multiplication table failed a structural check."""


class UnknownSuite(OctolineError, ValueError):
    """Verification suite name is not registered."""
