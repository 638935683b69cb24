"""Exception and warning types raised by :mod:`cfsm`."""


class CFSMError(Exception):
    """Base class for all errors raised by this package."""


class NumericalError(CFSMError):
    """A computation failed for numerical reasons (maps to CLI exit code 3)."""


class SingularMatrix(NumericalError):
    """A constraint matrix has a vanishing pivot.

    For the shipped supplementary families this indicates a bad family or an
    invalid smoothness order, not round-off.
    """


class IllConditioned(UserWarning):
    """Issued when the 1-norm condition estimate of a solve exceeds 1e12."""


class NonFiniteIntegrand(NumericalError):
    """An integrand returned inf or nan at a quadrature node."""


class DegenerateNormalizer(NumericalError):
    """The maximum of the exact derivative over the sampling grid is zero."""


class UnsupportedKind(CFSMError, ValueError):
    """The requested series kind has no supplementary family."""


class OrderOutOfRange(CFSMError, ValueError):
    """A derivative order outside ``0 <= k <= 2r`` was requested."""


class OrderNotBuilt(CFSMError, KeyError):
    """A direct expansion was queried for a derivative order it does not hold."""


class MissingComponent(CFSMError, KeyError):
    """An aggregate error index needs a single-component error that is absent."""


class UnknownSample(CFSMError, ValueError):
    """No sample function with the requested id."""
