"""Exception hierarchy shared by every monoid module.

Each class maps onto a single failure mode so the CLI can translate
exceptions into stable exit codes.
"""


class OmegaPrimalityError(Exception):
    """Base class for all package errors."""


# -- construction -----------------------------------------------------------

class InvalidMonoid(OmegaPrimalityError, ValueError):
    pass


class EmptyGenerators(InvalidMonoid):
    pass


class GcdNotOne(InvalidMonoid):
    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"generators have gcd {gcd}; divide by it to obtain a numerical monoid")


class DegenerateMonoid(InvalidMonoid):
    pass


class NotIdempotent(InvalidMonoid):
    pass


class StepInGamma(InvalidMonoid):
    pass


# -- element level ----------------------------------------------------------

class NotAMember(OmegaPrimalityError, ValueError):
    pass


class ZeroElement(OmegaPrimalityError, ValueError):
    pass


class DimensionMismatch(OmegaPrimalityError, ValueError):
    pass


class ElementOutOfRange(OmegaPrimalityError, ValueError):
    pass


class NotCoprime(OmegaPrimalityError, ValueError):
    pass


class ZeroFactorization(OmegaPrimalityError, ValueError):
    pass


class NotRegularUnit(OmegaPrimalityError, ValueError):
    pass


# -- search limits ----------------------------------------------------------

class BudgetExceeded(OmegaPrimalityError, RuntimeError):
    """A search would exceed its configured budget; results are never truncated."""


class FactorizationFailed(BudgetExceeded):
    pass


class CapNotFound(BudgetExceeded):
    pass


class BoxTooSmall(OmegaPrimalityError, ValueError):
    pass


# -- closed forms and fitting -----------------------------------------------

class BelowThreshold(OmegaPrimalityError, ValueError):
    pass


class FitError(OmegaPrimalityError, ValueError):
    pass


class SeriesTooShort(FitError):
    pass


class WindowUnstable(FitError):
    pass
