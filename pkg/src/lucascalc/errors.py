"""Exception types shared across the library."""


class LucasError(Exception):
    """Base class for every library-specific error."""


class ZeroParameter(LucasError):
    """A sequence parameter that must be nonzero is zero."""


class RootsUnavailable(LucasError):
    """Characteristic roots were requested but are not representable in the backend."""


class VanishingFactor(LucasError):
    """A sequence term {k} = 0 makes a factorial-based quantity undefined."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"sequence term {{{index}}} vanishes")


class IndexOutOfRange(LucasError):
    """A binomial-style index pair violates 0 <= k <= n."""


class DivisionByZeroFactor(LucasError):
    """A denominator factor in a telescoped product vanished."""


class BackendMismatch(LucasError):
    """Operands belong to different scalar backends; promote explicitly."""


class OrderMismatch(LucasError):
    """Series truncation orders are incompatible for the requested operation."""


class NonUnitConstantTerm(LucasError):
    """Series reciprocal requires a nonzero constant term."""


class PoleAtOrigin(LucasError):
    """The requested function has a pole at 0 and no power-series form."""


class SeriesDiverging(LucasError):
    """Adaptive summation detected sustained term growth."""


class DivisionByZeroValue(LucasError):
    """A quotient-type function was evaluated at a zero of its denominator."""


class NegativeNormalizer(LucasError):
    """The square-root normalizer of the tilde functions is not positive."""


class NonContractingNodes(LucasError):
    """Neither quadrature node family contracts for these parameters."""


class NonConvergent(LucasError):
    """The quadrature series showed no decay within the term budget."""


class NoRootFound(LucasError):
    """No sign change of the sine function was found on the scanned range."""


class UnknownIdentityId(LucasError):
    """The identity suite selection matches no catalog entry."""
