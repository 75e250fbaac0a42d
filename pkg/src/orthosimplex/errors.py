"""Exception types shared across the library."""


class OrthosimplexError(Exception):
    """Base class for all library-specific errors."""


class GammaPoleError(OrthosimplexError, ValueError):
    """Gamma evaluated at a pole (a non-positive integer)."""


class ParameterRangeError(OrthosimplexError, ValueError):
    """A parameter lies outside its admissible range."""


class NonTerminatingSeriesError(OrthosimplexError, ValueError):
    """No numerator parameter is a non-positive integer."""


class ZeroDenominatorError(OrthosimplexError, ZeroDivisionError):
    """A denominator Pochhammer factor vanishes inside the active range."""


class DimensionMismatchError(OrthosimplexError, ValueError):
    """Multi-index, parameter vector, and point dimensions disagree."""


class RuleMismatchError(OrthosimplexError, ValueError):
    """Quadrature rule domain or exactness does not fit the request."""


class BudgetInfeasibleError(OrthosimplexError, RuntimeError):
    """Requested accuracy would exceed the configured node-count cap."""


class StencilOutsideDomainError(OrthosimplexError, ValueError):
    """A finite-difference stencil leaves the simplex."""


class DegenerateParameterError(OrthosimplexError, ValueError):
    """A recurrence coefficient denominator vanishes for these parameters."""


class RankDeficientError(OrthosimplexError, RuntimeError):
    """Least-squares samples do not determine the fitted coefficients."""


class AnalyticContinuationWarning(UserWarning):
    """Beta evaluated outside Re(a), Re(b) > 0 via the Gamma-ratio continuation."""
