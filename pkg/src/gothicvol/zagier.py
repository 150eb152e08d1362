"""Gauss sums at prime powers, finite Euler factors and the coefficients
e*_k(d^2), ebar_k(d^2) for square arguments.

The Gauss sums gamma_{p^r}(d^2) follow the prime-power case tables

    p = 2:  1 if r = 0;  2^(r/2) if r even and nu_2(d^2) = r - 2;
            2^((r-1)/2) if r odd and nu_2(d^2) >= r - 1;  0 otherwise.
    p odd:  1 if r = 0;  p^(r/2-1)(p-1) if r even and nu_p(d^2) >= r;
            p^((r-1)/2) if r odd and nu_p(d^2) = r - 1;  0 otherwise.

They vanish for r > nu_p(d^2) + 2, so the local Euler factors

    P_k(p, n) = 1 + sum_{j>=1} gcd(p^j, 2k)^2 / p^(2j) * gamma_{p^j}(n)

are finite exact rational sums.  The infinite product e*_k(d^2) = prod_p P_k
is never truncated numerically: the tail over primes not dividing 2kd equals
prod (1 + p^-2) there, which is rewritten exactly as zeta(2)/zeta(4) = 15/pi^2
divided by the finitely many explicit factors.  e*_k is therefore carried as
a PiQuantity (rational times pi^-2), while

    ebar_k(d^2) = pi^2/(72 k^2) * d^3 * e*_k(d^2)

is an exact rational (the pi powers cancel).  ebar_1 also has the independent
divisor-sum form (5/12) d^3 sum_{ac | d} mu(a) / (c^3 a^2); both routes are
exposed and must agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    PiQuantity,
    coprime_part,
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    moebius,
    nu,
    sl2_order,
)
from .qforms import e_square_table

# zeta(2)/zeta(4) = prod_p (1 + p^-2) = 15/pi^2
_ZETA2_OVER_ZETA4 = PiQuantity(Fraction(15), -2)


@dataclass(frozen=True)
class EulerFactor:
    """The finite local factor P_k(p, d^2) of the Euler product of e*_k."""

    p: int
    value: Fraction


def gauss_gamma(p: int, r: int, d: int) -> Fraction:
    """gamma_{p^r}(d^2) for a square argument, by the case tables above."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 0 or d < 1:
        raise ValueError("need r >= 0 and d >= 1")
    if r == 0:
        return Fraction(1)
    v = 2 * nu(p, d)  # nu_p(d^2)
    if p == 2:
        if r % 2 == 0 and v == r - 2:
            return Fraction(2 ** (r // 2))
        if r % 2 == 1 and v >= r - 1:
            return Fraction(2 ** ((r - 1) // 2))
        return Fraction(0)
    if r % 2 == 0 and v >= r:
        return Fraction(p ** (r // 2 - 1) * (p - 1))
    if r % 2 == 1 and v == r - 1:
        return Fraction(p ** ((r - 1) // 2))
    return Fraction(0)


def euler_factor(k: int, p: int, d: int) -> EulerFactor:
    """P_k(p, d^2) = 1 + sum_j gcd(p^j, 2k)^2 p^(-2j) gamma_{p^j}(d^2), exact.

    The sum stops at j = nu_p(d^2) + 2 because all later Gauss sums vanish.
    """
    if not is_squarefree(k):
        raise ValueError(f"k = {k} must be squarefree")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = Fraction(1)
    for j in range(1, 2 * nu(p, d) + 3):
        g = gauss_gamma(p, j, d)
        if g:
            w = math.gcd(p**j, 2 * k)
            total += Fraction(w * w, p ** (2 * j)) * g
    return EulerFactor(p, total)


def estar1(d: int) -> PiQuantity:
    """e*_1(d^2) as an exact rational times pi^-2 (Euler product with zeta tail)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    primes = {2} | {p for p, _ in factorize(d)}
    coeff = Fraction(1)
    for p in sorted(primes):
        coeff *= euler_factor(1, p, d).value / (1 + Fraction(1, p * p))
    return _ZETA2_OVER_ZETA4 * coeff


def estar6(d: int) -> PiQuantity:
    """e*_6(d^2) = 36 (e*_1(d^2) - 3/5 e*_1(d_2^2) - 4/5 e*_1(d_3^2) + 12/25 e*_1(d_6^2))."""
    d2, d3, d6 = coprime_part(d, 2), coprime_part(d, 3), coprime_part(d, 6)
    return 36 * (
        estar1(d)
        - Fraction(3, 5) * estar1(d2)
        - Fraction(4, 5) * estar1(d3)
        + Fraction(12, 25) * estar1(d6)
    )


def ebar1_exact(d: int) -> Fraction:
    """ebar_1(d^2) = (5/12) d^3 sum_{a,c >= 1, ac | d} mu(a) / (c^3 a^2), exact."""
    if d < 1:
        raise ValueError("d must be >= 1")
    acc = Fraction(0)
    for a in divisors(d):
        mu = moebius(a)
        if mu == 0:
            continue
        for c in divisors(d // a):
            acc += Fraction(mu, c**3 * a * a)
    return Fraction(5, 12) * d**3 * acc


def ebar1_via_euler_product(d: int) -> Fraction:
    """ebar_1(d^2) through pi^2/72 * d^3 * e*_1(d^2); the pi powers cancel."""
    return (PiQuantity(Fraction(d**3, 72), 2) * estar1(d)).as_rational()


def ebar6_exact(d: int) -> Fraction:
    """ebar_6(d^2) as the exact four-term ebar_1 combination.

    ebar_6(d^2) = ebar_1(d^2) - 3/5 (d/d_2)^3 ebar_1(d_2^2)
                  - 4/5 (d/d_3)^3 ebar_1(d_3^2) + 12/25 (d/d_6)^3 ebar_1(d_6^2)
    """
    d2, d3, d6 = coprime_part(d, 2), coprime_part(d, 3), coprime_part(d, 6)
    return (
        ebar1_exact(d)
        - Fraction(3, 5) * (d // d2) ** 3 * ebar1_exact(d2)
        - Fraction(4, 5) * (d // d3) ** 3 * ebar1_exact(d3)
        + Fraction(12, 25) * (d // d6) ** 3 * ebar1_exact(d6)
    )


def ebar6_via_euler_product(d: int) -> Fraction:
    """ebar_6(d^2) through pi^2/(72*36) * d^3 * e*_6(d^2)."""
    return (PiQuantity(Fraction(d**3, 72 * 36), 2) * estar6(d)).as_rational()


def check_technical_lemma(k: int, d: int) -> bool:
    """Verify the Moebius-sum reduction of e*_1 at k-coprime parts, on the
    exact ebar_1 scale where the pi powers cancel:

        sum_{m|d} mu(d/m) (m/m_k)^3 ebar_1(m_k^2)
            = prod_{p | (k,d)} p^(3 nu_p(d) - 3) (p^3 - 1)
              * sum_{m | d_k} mu(d_k/m) ebar_1(m^2).

    (The right-hand Moebius factor runs over d_k, the k-coprime part of d;
    with mu(d/m) there the identity fails, e.g. at k = 2, d = 4.)
    """
    if not is_squarefree(k):
        raise ValueError(f"k = {k} must be squarefree")
    if d < 1:
        raise ValueError("d must be >= 1")
    lhs = Fraction(0)
    for m in divisors(d):
        mu = moebius(d // m)
        if mu:
            mk = coprime_part(m, k)
            lhs += mu * Fraction(m // mk) ** 3 * ebar1_exact(mk)
    dk = coprime_part(d, k)
    factor = 1
    for p, _ in factorize(math.gcd(k, d)):
        factor *= p ** (3 * nu(p, d) - 3) * (p**3 - 1)
    rhs = factor * sum(
        (moebius(dk // m) * ebar1_exact(m) for m in divisors(dk)), Fraction(0)
    )
    return lhs == rhs


def kappa(d: int) -> Fraction:
    """Leading constant of e(d^2, 6) / (a(d)/60), by the class of gcd(6, d)."""
    return {1: Fraction(2), 2: Fraction(3, 2), 3: Fraction(4, 3), 6: Fraction(1)}[
        math.gcd(6, d)
    ]


@dataclass
class AsymptoticReport:
    """Scaled deviations of e(d^2, k) from its main term, for k = 1 and 6.

    delta1[d] = |e(d^2,1) - (5/12) a(d)| / d^(5/2)
    delta6[d] = |e(d^2,6) - kappa(d) a(d) / 60| / d^(5/2)

    with the half-range maxima max over (d_max/2, d_max] and the previous
    half-range (d_max/4, d_max/2], plus their ratio.
    """

    d_max: int
    delta1: list[float] = field(repr=False)
    delta6: list[float] = field(repr=False)
    delta1_upper_max: float = 0.0
    delta1_lower_max: float = 0.0
    delta1_ratio: float = 0.0
    delta6_upper_max: float = 0.0
    delta6_lower_max: float = 0.0
    delta6_ratio: float = 0.0

    def range_max(self, k: int, lo: int, hi: int) -> float:
        deltas = self.delta1 if k == 1 else self.delta6
        return max(deltas[lo : hi + 1])


def asymptotic_check_e(d_max: int) -> AsymptoticReport:
    """Deviation report for e(d^2, 1) and e(d^2, 6), d <= d_max."""
    if d_max < 24:
        raise ValueError("d_max must be >= 24")
    e1 = e_square_table(1, d_max)
    e6 = e_square_table(6, d_max)
    delta1 = [0.0] * (d_max + 1)
    delta6 = [0.0] * (d_max + 1)
    for d in range(1, d_max + 1):
        a = sl2_order(d)
        delta1[d] = float(abs(e1[d] - Fraction(5, 12) * a)) / float(d) ** 2.5
        delta6[d] = float(abs(e6[d] - kappa(d) * Fraction(a, 60))) / float(d) ** 2.5
    half, quarter = d_max // 2, d_max // 4
    up1 = max(delta1[half + 1 :])
    lo1 = max(delta1[quarter + 1 : half + 1])
    up6 = max(delta6[half + 1 :])
    lo6 = max(delta6[quarter + 1 : half + 1])
    return AsymptoticReport(
        d_max=d_max,
        delta1=delta1,
        delta6=delta6,
        delta1_upper_max=up1,
        delta1_lower_max=lo1,
        delta1_ratio=up1 / lo1 if lo1 else float("inf"),
        delta6_upper_max=up6,
        delta6_lower_max=lo6,
        delta6_ratio=up6 / lo6 if lo6 else float("inf"),
    )
