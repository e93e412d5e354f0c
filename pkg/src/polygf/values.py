"""Container for truncated-series results."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SeriesValue:
    """Value of a truncated lattice/series sum with a certified tail bound.

    ``tail_bound`` dominates the modulus of everything that was not summed;
    ``terms_used`` counts evaluated lattice points (mask included).
    """

    value: complex
    tail_bound: float
    terms_used: int

    def __complex__(self) -> complex:
        return self.value

    def certifies(self, tol: float) -> bool:
        return self.tail_bound <= tol
