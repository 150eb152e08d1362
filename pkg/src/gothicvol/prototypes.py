"""Prototype enumeration and the arithmetic function e(D, k).

A prototype for the pair (D, k) is an integer triple [a, b, c] with

    a > 0 > c,    D = b^2 - 4*k*a*c,    gcd(f, b, c0) = 1,

where D = f^2 D_0 with conductor f, and c = c0^2 c' with c' squarefree.
The weighted count e(D, k) is the sum of a over all prototypes; by convention
e(1, k) = -1/12.  Enumeration runs b over |b| < sqrt(D) with b^2 = D mod 4k
and splits (D - b^2)/(4k) into ordered factor pairs a * (-c), so the output
order is increasing b, then increasing a.

The independent cross-check against these counts is the modular-form
coefficient route in ``qforms`` (see check_e_and_a there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisor_factorizations, divisors, factorize, squarefree_decompose


@dataclass(frozen=True)
class DiscriminantDecomposition:
    """D = f^2 * D0 with D0 a fundamental discriminant, or D0 = 1 for squares."""

    D: int
    f: int
    D0: int
    is_square: bool


@dataclass(frozen=True)
class Prototype:
    a: int
    b: int
    c: int
    k: int
    D: int

    def validate(self) -> bool:
        """Re-check the two defining invariants of this triple."""
        if not (self.a > 0 > self.c):
            return False
        if self.b * self.b - 4 * self.k * self.a * self.c != self.D:
            return False
        f = conductor_decompose(self.D).f
        c0, _ = squarefree_decompose(self.c)
        return math.gcd(math.gcd(f, abs(self.b)), c0) == 1


def _validate_discriminant(D: int) -> None:
    if D < 1 or D % 4 in (2, 3):
        raise ValueError(f"{D} is not a discriminant (need D >= 1, D = 0,1 mod 4)")


def is_fundamental(n: int) -> bool:
    """Fundamental discriminant test for positive n > 1."""
    if n % 4 == 1:
        return all(e == 1 for _, e in factorize(n))
    if n % 4 == 0:
        m = n // 4
        return m % 4 in (2, 3) and all(e == 1 for _, e in factorize(m))
    return False


def conductor_decompose(D: int) -> DiscriminantDecomposition:
    """Split D = f^2 * D0 with D0 fundamental; square D returns (f=sqrt(D), D0=1).

    f is the largest integer such that D/f^2 is an integer = 0,1 mod 4 that is
    fundamental (or 1, which happens exactly when D is a perfect square).
    """
    _validate_discriminant(D)
    r = math.isqrt(D)
    if r * r == D:
        return DiscriminantDecomposition(D, r, 1, True)
    square_root_part = 1
    for p, e in factorize(D):
        square_root_part *= p ** (e // 2)
    for f in sorted(divisors(square_root_part), reverse=True):
        D0 = D // (f * f)
        if D0 % 4 in (0, 1) and is_fundamental(D0):
            return DiscriminantDecomposition(D, f, D0, False)
    raise AssertionError(f"no fundamental decomposition found for {D}")


def enumerate_prototypes(D: int, k: int) -> list[Prototype]:
    """All prototypes [a, b, c] for (D, k), ordered by increasing b then a."""
    _validate_discriminant(D)
    if D < 2:
        raise ValueError("prototype enumeration needs D >= 2 (e(1,k) is a convention)")
    if k < 1:
        raise ValueError("k must be a positive integer")
    f = conductor_decompose(D).f
    out = []
    bmax = math.isqrt(D - 1)  # |b| < sqrt(D), strictly: a*(-c) > 0
    for b in range(-bmax, bmax + 1):
        rem = D - b * b
        if rem % (4 * k):
            continue
        n = rem // (4 * k)
        gb = math.gcd(f, abs(b))
        # walk divisors a of n with their exponent vectors so the squarefree
        # part of c = -n/a comes straight out of the exponents
        fac, divs = divisor_factorizations(n)
        divs.sort()
        for a, exps in divs:
            c0 = 1
            for (p, e), i in zip(fac, exps):
                c0 *= p ** ((e - i) // 2)
            if math.gcd(gb, c0) == 1:
                out.append(Prototype(a, b, -(n // a), k, D))
    return out


def e_value(D: int, k: int) -> Fraction:
    """e(D, k) = sum of a over the prototype set; e(1, k) = -1/12."""
    if D == 1:
        return Fraction(-1, 12)
    return Fraction(sum(p.a for p in enumerate_prototypes(D, k)))
