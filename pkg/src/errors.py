"""
Exception hierarchy shared by the numeric and simulation modules.

Numeric failures derive from ``FppError`` (an ``ArithmeticError``); bad inputs
derive from ``ValueError`` so the CLI can tell usage errors from failures.
"""
from typing import Optional, Sequence


class FppError(ArithmeticError):
    """Base class for numeric failures."""


class PoleError(FppError):
    """Gamma evaluated at a non-positive integer."""


class ConvergenceError(FppError):
    """A series did not reach its tolerance within the allowed terms."""

    def __init__(self, message: str, terms: int = 0, partial_sum: float = 0.0,
                 last_terms: Optional[Sequence[float]] = None):
        self.terms = terms
        self.partial_sum = partial_sum
        self.last_terms = list(last_terms or [])
        super().__init__(
            f"{message} (terms={terms}, partial_sum={partial_sum:.6g}, "
            f"last_terms={[f'{t:.3g}' for t in self.last_terms]})"
        )


class TruncationError(FppError):
    """Front chain tail mass still above tolerance at the truncation cap."""

    def __init__(self, truncation: int, tail_mass: float, tol: float):
        self.truncation = truncation
        self.tail_mass = tail_mass
        super().__init__(
            f"tail mass {tail_mass:.3g} > {tol:.3g} at truncation cap K={truncation}"
        )


class SimulationError(FppError):
    """Incremental frontier bookkeeping disagrees with a full recount."""


class RegimeError(ValueError):
    """Parameter outside the supported numeric regime."""


class GraphSpecError(ValueError):
    """Invalid graph unit cell."""


class NoPercolation(GraphSpecError):
    """Infection can never advance in height."""


class NonPositiveIntensity(GraphSpecError):
    """An edge was given an intensity <= 0."""

    def __init__(self, field: str, value: float):
        self.field = field
        super().__init__(f"{field}: intensity must be > 0, got {value}")
