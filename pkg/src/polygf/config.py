"""Build-wide numeric policy.

All series in this package are truncated against ``term_cut``: summation may
stop once certified bounds show the remaining tail is below ``term_cut``
times the scale of the partial sum.  The resulting tail estimates are stored
on returned values so callers can refuse tolerances they cannot certify.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

_PROFILES = {
    # relative truncation target, hard floor for certifiable tolerances
    "standard": (1e-17, 1e-14),
    "strict": (5e-19, 1e-14),
}


@dataclass(frozen=True)
class Precision:
    term_cut: float
    min_tolerance: float

    @property
    def log_cut(self) -> float:
        """|log term_cut|, handy when solving for truncation radii."""
        return -math.log(self.term_cut)


def active_profile() -> Precision:
    """Precision profile selected by POLYGF_PRECISION (standard|strict)."""
    name = os.environ.get("POLYGF_PRECISION", "standard").strip().lower()
    if name not in _PROFILES:
        raise KeyError(f"unknown precision profile {name!r}; expected one of {sorted(_PROFILES)}")
    cut, floor = _PROFILES[name]
    return Precision(term_cut=cut, min_tolerance=floor)
