"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ConvergenceError(RuntimeError):
    """Adaptive truncation hit its cap before the requested accuracy.

    Carries the last two iterates so the caller can judge how far off
    the result was.
    """

    def __init__(self, message, last_iterates=None):
        super().__init__(message)
        self.last_iterates = last_iterates


class BoundaryNotFoundError(RuntimeError):
    """No threshold crossing was found inside the search range."""


class AmbiguityError(RuntimeError):
    """A degeneracy test produced contradictory answers.

    Carries the offending samples for inspection.
    """

    def __init__(self, message, samples=None):
        super().__init__(message)
        self.samples = samples


class SeparatrixError(DomainError):
    """Classical parameters sit exactly on the separatrix (E = U)."""
