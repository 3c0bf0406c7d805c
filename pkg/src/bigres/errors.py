"""Exception types shared across the package.

Every domain error raised by the library derives from :class:`BigresError`,
so callers (in particular the CLI) can distinguish domain failures from
programming errors.
"""


class BigresError(Exception):
    """Base class for all domain errors."""


class ZeroPolynomialError(BigresError):
    """An operation that needs a nonzero polynomial received zero."""


class InhomogeneousError(BigresError):
    """A polynomial was expected to be homogeneous for some grading."""


class MissingWeightsError(BigresError):
    """Quasi-homogeneous weights are required but absent from the ring."""


class ModeMismatchError(BigresError):
    """Global/local mode of an operation conflicts with the monomial order."""


class InfiniteDimensionalError(BigresError):
    """A quotient expected to be a finite-dimensional vector space is not."""


class NotAComplexError(BigresError):
    """Consecutive differentials do not compose to zero."""


class NotMinimalError(BigresError):
    """A complex expected to be minimal has an entry with a constant term."""


class LiftError(BigresError):
    """A chain-map lift failed because a membership test failed."""


class HypothesisError(BigresError):
    """A construction's numerical hypothesis (e.g. t <= n - m) is violated."""


class NotDivisibleError(BigresError):
    """An exact polynomial division left a remainder."""
