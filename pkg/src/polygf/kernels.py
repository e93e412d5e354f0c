"""Scalar kernels: rescaled error function, Kronecker symbol, eta multiplier.

Everything here is an exact pure function of its arguments; no state, no
tolerance knobs.  The eta multiplier is normalized so that

    eta(g . tau) = nu_eta(g) * sqrt(c*tau + d) * eta(tau)

holds with the principal branch of the square root for every g in SL2(Z).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)


def gaussian_error(x: float) -> float:
    """Error function in Gaussian normalization: 2*integral_0^x exp(-pi t^2) dt.

    Equals erf(sqrt(pi)*x); odd, strictly increasing, |value| < 1.
    """
    return math.erf(SQRT_PI * x)


def gaussian_error_tail(x: float) -> float:
    """1 - gaussian_error(x), computed without cancellation for large x."""
    return math.erfc(SQRT_PI * x)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), fully extended to all integers.

    Conventions: (a|0) = 1 iff a = +-1, (a|-1) = -1 iff a < 0,
    (a|2) = 0 for even a and +-1 by a mod 8 otherwise.
    """
    a = int(a)
    n = int(n)
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out 2s from the modulus
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol on the remaining odd modulus via reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class SL2Matrix:
    """Integer matrix (a b; c d) with ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self.entries()} is not 1")

    @staticmethod
    def identity() -> "SL2Matrix":
        return SL2Matrix(1, 0, 0, 1)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def automorphy(self, tau: complex) -> complex:
        return self.c * tau + self.d


def _nu_eta_raw(g: SL2Matrix) -> complex:
    """Two-branch eta multiplier formula; valid as written for c > 0."""
    a, b, c, d = g.entries()
    if c % 2 != 0:
        sym = kronecker_symbol(d, abs(c))
        expo = (a + d) * c - b * d * (c * c - 1) - 3 * c
    else:
        sym = kronecker_symbol(c, d)
        expo = a * c * (1 - d * d) + d * (b - c + 3) - 3
    # e^(i pi expo / 12) has period 24 in the integer expo; reduce first so
    # huge matrix entries cannot degrade the trigonometric accuracy.
    return sym * cmath.exp(1j * math.pi * (expo % 24) / 12.0)


def nu_eta(g: SL2Matrix) -> complex:
    """Multiplier of the Dedekind eta function on SL2(Z).

    The two-branch closed formula is applied for c > 0 (and for c = 0, d > 0);
    other matrices are reduced through g -> -g.  Negating g flips the
    automorphy factor c*tau + d across the real axis, and the principal
    square root turns that into a rotation by +-i: sqrt(-w) = i*sqrt(w) for
    Im w < 0 (the case c < 0) and sqrt(-w) = -i*sqrt(w)... i.e. sqrt(w) =
    i*sqrt(-w) for w a negative real (the case c = 0, d < 0).  The result
    satisfies the eta transformation with the principal branch for all g.
    """
    a, b, c, d = g.entries()
    if c < 0:
        return 1j * _nu_eta_raw(-g)
    if c == 0 and d < 0:
        return -1j * _nu_eta_raw(-g)
    return _nu_eta_raw(g)


_GROUPS = ("sl2z", "gamma0_3", "gamma_2", "gamma0_3_cap_gamma_2")


def subgroup_member(g: SL2Matrix, which: str) -> bool:
    """Congruence-subgroup membership, tested exactly.

    ``which``: one of 'sl2z', 'gamma0_3' (c = 0 mod 3), 'gamma_2'
    (congruent to the identity mod 2), 'gamma0_3_cap_gamma_2'.
    """
    if which not in _GROUPS:
        raise DomainError(f"unknown subgroup {which!r}; expected one of {_GROUPS}")
    a, b, c, d = g.entries()
    in_g03 = c % 3 == 0
    in_g2 = a % 2 == 1 and d % 2 == 1 and b % 2 == 0 and c % 2 == 0
    if which == "sl2z":
        return True
    if which == "gamma0_3":
        return in_g03
    if which == "gamma_2":
        return in_g2
    return in_g03 and in_g2
