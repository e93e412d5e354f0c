"""Dedekind eta and the odd Jacobi theta function.

Conventions: tau = u + iv with v > 0, q = exp(2*pi*i*tau), zeta = exp(2*pi*i*z).
All fractional powers of q and zeta are defined through exponentials of tau
and z, so no branch ambiguity arises; sqrt(c*tau+d) is the principal branch.

theta(z; tau) = sum over half-integers n of q^(n^2/2) e^(2 pi i n (z + 1/2)),
an odd entire function of z whose zeros are exactly z in Z*tau + Z.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import active_profile
from .errors import DomainError, PoleError, PrecisionError
from .kernels import SL2Matrix, nu_eta

TWO_PI = 2.0 * math.pi


def check_tau(tau: complex) -> complex:
    tau = complex(tau)
    if not (tau.imag > 0.0) or not math.isfinite(tau.imag) or not math.isfinite(tau.real):
        raise DomainError(f"tau = {tau} is not in the upper half-plane")
    return tau


def _check_finite(value: complex, context: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise PrecisionError(f"{context}: value escaped double precision ({value})")
    return value


@dataclass(frozen=True)
class ModularPoint:
    """Point tau = u + iv of the upper half-plane."""

    u: float
    v: float

    def __post_init__(self) -> None:
        if not (self.v > 0.0):
            raise DomainError(f"modular point needs v > 0, got v = {self.v}")

    @property
    def tau(self) -> complex:
        return complex(self.u, self.v)

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)

    @staticmethod
    def from_tau(tau: complex) -> "ModularPoint":
        tau = check_tau(tau)
        return ModularPoint(tau.real, tau.imag)


@dataclass(frozen=True)
class EllipticPoint:
    """Elliptic argument z = x + iy attached to a modular point.

    Exposes the decomposition z = alpha*tau + beta with real alpha, beta.
    """

    x: float
    y: float
    point: ModularPoint

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def alpha(self) -> float:
        return self.y / self.point.v

    @property
    def beta(self) -> float:
        return self.x - self.point.u * self.y / self.point.v

    @staticmethod
    def from_z(z: complex, tau: complex) -> "EllipticPoint":
        return EllipticPoint(complex(z).real, complex(z).imag, ModularPoint.from_tau(tau))


def lattice_distance(z: complex, tau: complex) -> float:
    """Euclidean distance from z to the lattice Z*tau + Z."""
    tau = check_tau(tau)
    z = complex(z)
    v = tau.imag
    alpha = z.imag / v
    beta = z.real - tau.real * z.imag / v
    fa = alpha - math.floor(alpha)
    fb = beta - math.floor(beta)
    best = math.inf
    for da in (fa, fa - 1.0):
        for db in (fb, fb - 1.0):
            best = min(best, abs(da * tau + db))
    return best


def require_off_lattice(z: complex, tau: complex, guard: float = 1e-8, label: str = "z") -> None:
    d = lattice_distance(z, tau)
    if d < guard:
        raise PoleError(f"{label} = {z} is within {d:.2e} of the period lattice (guard {guard:.0e})")


# ---------------------------------------------------------------------------
# Dedekind eta
# ---------------------------------------------------------------------------

def eta(tau: complex) -> complex:
    """Dedekind eta via the pentagonal-number series; certified to ~1e-16 relative."""
    tau = check_tau(tau)
    v = tau.imag
    cut = active_profile().log_cut + 3.0
    kmax = int(math.ceil(math.sqrt(cut / (3.0 * math.pi * v)))) + 2
    k = np.arange(-kmax, kmax + 1)
    expo = k * (3 * k - 1) / 2.0  # pentagonal numbers
    terms = np.exp(2j * math.pi * tau * (expo + 1.0 / 24.0)) * np.where(k % 2 == 0, 1.0, -1.0)
    val = complex(np.sum(terms[np.argsort(expo)][::-1]))  # small terms first
    return _check_finite(val, "eta")


def eta_product(tau: complex, nfactors: int = 200) -> complex:
    """Eta by its q-product with a fixed number of factors (cross-check oracle)."""
    tau = check_tau(tau)
    q = cmath.exp(2j * math.pi * tau)
    out = cmath.exp(2j * math.pi * tau / 24.0)
    qn = 1.0 + 0.0j
    for _ in range(nfactors):
        qn *= q
        out *= 1.0 - qn
    return out


# ---------------------------------------------------------------------------
# Jacobi theta
# ---------------------------------------------------------------------------

def _theta_window(y: float, v: float) -> np.ndarray:
    """Half-integer summation window centred on the max-magnitude term."""
    cut = active_profile().log_cut + 3.0
    centre = -y / v
    radius = math.sqrt(cut / (math.pi * v)) + 1.0
    lo = int(math.floor(centre - radius))
    hi = int(math.ceil(centre + radius))
    return np.arange(lo, hi + 1) + 0.5


def theta(z: complex, tau: complex) -> complex:
    """Odd Jacobi theta function (series evaluation).

    Arguments within 1e-12 of the period lattice return an exact 0: the
    function vanishes there and the raw sum could only produce amplified
    roundoff of the huge quasi-period factor.
    """
    tau = check_tau(tau)
    z = complex(z)
    if lattice_distance(z, tau) < 1e-12:
        return 0.0 + 0.0j
    n = _theta_window(z.imag, tau.imag)
    expo = 1j * math.pi * tau * n * n + 2j * math.pi * n * (z + 0.5)
    mags = expo.real
    order = np.argsort(mags)  # sum small terms first
    val = complex(np.sum(np.exp(expo[order])))
    return _check_finite(val, "theta")


def theta_product(z: complex, tau: complex, nfactors: int = 200) -> complex:
    """Jacobi triple product evaluation of theta (cross-check oracle)."""
    tau = check_tau(tau)
    z = complex(z)
    q = cmath.exp(2j * math.pi * tau)
    zeta = cmath.exp(2j * math.pi * z)
    out = -1j * cmath.exp(2j * math.pi * (tau / 8.0 - z / 2.0))
    qn = 1.0 + 0.0j
    for n in range(1, nfactors + 1):
        qn *= q
        out *= (1.0 - qn) * (1.0 - zeta * qn / q) * (1.0 - qn / zeta)
    return out


def theta_quasi_period(z: complex, ell: int, m: int, tau: complex) -> complex:
    """Value of theta(z + ell*tau + m) predicted by quasi-periodicity.

    Returns (-1)^(ell+m) q^(-ell^2/2) zeta^(-ell) theta(z; tau).
    """
    tau = check_tau(tau)
    z = complex(z)
    sign = -1.0 if (ell + m) % 2 else 1.0
    factor = cmath.exp(-1j * math.pi * tau * ell * ell - 2j * math.pi * ell * z)
    return sign * factor * theta(z, tau)


def theta_modular(g: SL2Matrix, z: complex, tau: complex) -> complex:
    """Value of theta(z/(c tau+d); g.tau) predicted by the modular law.

    Returns nu_eta(g)^3 sqrt(c tau + d) exp(pi i c z^2/(c tau + d)) theta(z; tau),
    with the principal square root.
    """
    tau = check_tau(tau)
    z = complex(z)
    j = g.automorphy(tau)
    return nu_eta(g) ** 3 * cmath.sqrt(j) * cmath.exp(1j * math.pi * g.c * z * z / j) * theta(z, tau)
