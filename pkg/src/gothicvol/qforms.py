"""Formal q-expansions of theta, G2 and the products F_k = G2(2k tau) theta(tau).

Everything here is a formal power series in q = e^(pi i tau) with exact
rational coefficients:

    theta(tau)   = sum_l q^(l^2)                (coefficient 2 at positive
                                                 squares, 1 at q^0)
    G2(2k tau)   = -1/24 + sum_{a>=1} sigma(a) q^(4ka)
    F_k(tau)     = G2(2k tau) theta(tau) = sum_n e_k(n) q^n

The coefficients have the closed divisor-sum form

    e_k(n) = sum_{b^2 = n mod 4k, |b| <= sqrt(n)} sigma((n - b^2) / 4k)

with the convention sigma(0) = -1/24 (a special case of this module only;
arith.sigma stays standard).  The identity

    e_k(D) = sum_{m | f} e(D/m^2, k)        (D = f^2 D_0 with conductor f)

ties these coefficients to the prototype counts and is the primary
anti-bug oracle between the two modules: see check_e_and_a.  Moebius
inversion of the same identity gives the fast exact evaluation of e(d^2, k)
used by the volume harness (e_square_table).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import arith
from .arith import divisors, moebius, sigma
from .prototypes import conductor_decompose, e_value

_SIGMA0 = Fraction(-1, 24)  # sigma(0) convention inside e_k only


@dataclass
class QExpansion:
    """Dense 0-indexed coefficient array; valid exponents are 0..truncation."""

    coeffs: list[Fraction]
    truncation: int

    @classmethod
    def from_coeffs(cls, coeffs) -> "QExpansion":
        return cls(list(coeffs), len(coeffs) - 1)

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        """Cauchy product, valid up to the smaller truncation bound."""
        N = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (N + 1)
        # exact naive product; skip zero coefficients (theta is very sparse)
        for i, ci in enumerate(self.coeffs[: N + 1]):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs[: N + 1 - i]):
                if cj:
                    out[i + j] += ci * cj
        return QExpansion(out, N)


def theta_expansion(N: int) -> QExpansion:
    """theta = sum_l q^(l^2) up to q^N."""
    if N < 1:
        raise ValueError("truncation bound must be >= 1")
    coeffs = [Fraction(0)] * (N + 1)
    coeffs[0] = Fraction(1)
    l = 1
    while l * l <= N:
        coeffs[l * l] = Fraction(2)
        l += 1
    return QExpansion(coeffs, N)


def g2k_expansion(k: int, N: int) -> QExpansion:
    """G2(2k tau) in the q = e^(pi i tau) variable up to q^N."""
    if k < 1 or N < 1:
        raise ValueError("k and N must be >= 1")
    coeffs = [Fraction(0)] * (N + 1)
    coeffs[0] = _SIGMA0
    for a in range(1, N // (4 * k) + 1):
        coeffs[4 * k * a] = Fraction(sigma(1, a))
    return QExpansion(coeffs, N)


def fk_expansion(k: int, N: int) -> QExpansion:
    """F_k = G2(2k tau) * theta(tau), by series multiplication."""
    return g2k_expansion(k, N) * theta_expansion(N)


def ek_coeff(k: int, n: int) -> Fraction:
    """e_k(n) by the direct divisor sum (independent of series multiplication)."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    total = Fraction(0)
    B = math.isqrt(n)
    for b in range(-B, B + 1):
        rem = n - b * b
        if rem % (4 * k) == 0:
            m = rem // (4 * k)
            total += _SIGMA0 if m == 0 else sigma(1, m)
    return total


def ek_square_table(k: int, mmax: int) -> list[Fraction]:
    """e_k(m^2) for 0 <= m <= mmax (entry 0 unused), via a sigma sieve."""
    if mmax < 1:
        raise ValueError("mmax must be >= 1")
    sig = arith.sigma_table(mmax * mmax // (4 * k) + 1)
    out = [Fraction(0)] * (mmax + 1)
    for m in range(1, mmax + 1):
        n = m * m
        acc = 0  # integer part; the only fractional terms are sigma(0) at b = +-m
        for b in range(m - 1, -1, -1):
            rem = n - b * b
            if rem % (4 * k) == 0:
                acc += int(sig[rem // (4 * k)])
        # b and -b contribute equally for b > 0; b = 0 contributes once
        doubled = 2 * acc
        if n % (4 * k) == 0:
            doubled -= int(sig[n // (4 * k)])
        out[m] = doubled + 2 * _SIGMA0  # b = +-m give sigma(0) each
    return out


def e_square_table(k: int, dmax: int) -> list[Fraction]:
    """Exact e(d^2, k) for 0 <= d <= dmax via Moebius inversion of e_and_a.

    e(d^2, k) = sum_{m | d} mu(d/m) e_k(m^2); exact because the relation
    e_k(D) = sum_{m|f} e(D/m^2, k) is an identity of the coefficients
    (verified against prototype enumeration by check_e_and_a).
    """
    ek = ek_square_table(k, dmax)
    out = [Fraction(0)] * (dmax + 1)
    for d in range(1, dmax + 1):
        out[d] = sum((moebius(d // m) * ek[m] for m in divisors(d)), Fraction(0))
    return out


def check_e_and_a(D: int, k: int) -> bool:
    """Does e_k(D) equal sum_{m|f} e(D/m^2, k) with e from prototype counting?"""
    f = conductor_decompose(D).f
    rhs = sum((e_value(D // (m * m), k) for m in divisors(f)), Fraction(0))
    return ek_coeff(k, D) == rhs
