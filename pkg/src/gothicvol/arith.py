"""Exact arithmetic substrate: rationals, pi-multiples and multiplicative functions.

Everything downstream (prototype counts, q-expansions, Euler characteristics,
volume sums) is built on the functions in this module.  All user-visible values
are exact: rationals are ``fractions.Fraction`` (always reduced, positive
denominator), integers are Python arbitrary-precision ints.  Fixed-width numpy
arrays appear only in sieve tables whose entries provably fit in int64.

Key objects:
    moebius(n)             -- Moebius function
    sigma(k, n)            -- divisor power sum sigma_k(n)
    sl2_order(d)           -- a(d) = |SL(2, Z/dZ)| = d * sum_{m|d} mu(d/m) m^2
    coprime_part(d, m)     -- d_m, the largest divisor of d coprime to m
    squarefree_decompose   -- c = c0^2 * c' with c' squarefree
    dirichlet_convolve     -- (f*g)(n) = sum_{ab=n} f(a) g(b), exact
    hermite_sublattices(n) -- Hermite normal forms (a, s; 0, c) of index n
    PiQuantity             -- exact rational times an integer power of pi

A smallest-prime-factor sieve (default bound 10^7, override with the
GOTHICVOL_SIEVE_BOUND environment variable) backs factorisation; inputs beyond
the sieve bound fall back to trial division.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

# The universal exact scalar.  fractions.Fraction already guarantees the two
# invariants we need: lowest terms and positive denominator.
ExactRational = Fraction

DEFAULT_SIEVE_BOUND = 10**7
SIEVE_BOUND_ENV = "GOTHICVOL_SIEVE_BOUND"


# ---------------------------------------------------------------------------
# pi-multiples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiQuantity:
    """An exact rational coefficient times an integer power of pi.

    Represents values such as 13*pi^4/31104 or 30*pi^-2 without rounding.
    Multiplication adds pi-powers; addition is defined only between equal
    pi-powers (adding pi^4 to pi^2 has no exact rational representation).
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def __mul__(self, other):
        if isinstance(other, PiQuantity):
            return PiQuantity(self.coeff * other.coeff, self.pi_power + other.pi_power)
        return PiQuantity(self.coeff * Fraction(other), self.pi_power)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, PiQuantity):
            other = PiQuantity(Fraction(other), 0)
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add pi^{self.pi_power} to pi^{other.pi_power} exactly"
            )
        return PiQuantity(self.coeff + other.coeff, self.pi_power)

    def __neg__(self):
        return PiQuantity(-self.coeff, self.pi_power)

    def __sub__(self, other):
        return self + (-other)

    def as_rational(self) -> Fraction:
        """The coefficient, provided all pi powers have cancelled."""
        if self.pi_power != 0:
            raise ValueError(f"value still carries pi^{self.pi_power}")
        return self.coeff

    def to_float(self) -> float:
        return float(self.coeff) * math.pi**self.pi_power

    def __repr__(self):
        if self.pi_power == 0:
            return f"{self.coeff}"
        return f"{self.coeff}*pi^{self.pi_power}"


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorisation.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly increasing
    primes; the product of the prime powers equals ``value``.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "FactoredInteger":
        return cls(n, factorize(n))


# ---------------------------------------------------------------------------
# Smallest-prime-factor sieve
# ---------------------------------------------------------------------------

_spf: np.ndarray | None = None
_spf_bound = 0


def sieve_bound() -> int:
    """The configured sieve bound (environment override wins)."""
    raw = os.environ.get(SIEVE_BOUND_ENV)
    if raw:
        return max(4, int(raw))
    return DEFAULT_SIEVE_BOUND


def _ensure_sieve(bound: int | None = None) -> np.ndarray:
    global _spf, _spf_bound
    want = sieve_bound() if bound is None else bound
    if _spf is None or _spf_bound < want:
        spf = np.zeros(want, dtype=np.int32)
        for p in range(2, math.isqrt(want - 1) + 1):
            if spf[p] == 0:
                sl = spf[p * p :: p]
                sl[sl == 0] = p
        idx = np.arange(want, dtype=np.int32)
        mask = spf == 0
        spf[mask] = idx[mask]  # remaining zeros are primes (or 0, 1)
        _spf, _spf_bound = spf, want
    return _spf


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of n >= 1 as ((p1, e1), (p2, e2), ...), p1 < p2 < ...

    Uses the SPF sieve below its bound, trial division above it.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    if n == 1:
        return ()
    out = []
    if n < _spf_bound or n < sieve_bound():
        spf = _ensure_sieve()
        m = n
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        return tuple(out)
    # trial division fallback for inputs beyond the sieve
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += 2 if f % 6 == 5 else 4  # 6k +- 1 wheel
    if m > 1:
        out.append((m, 1))
    return tuple(sorted(out))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    fac = factorize(n)
    return len(fac) == 1 and fac[0][1] == 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted increasingly."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def divisor_factorizations(n: int):
    """Yield (d, exponents) for every divisor d of n, where ``exponents``
    lists the exponent of d at each prime of n (in factorize(n) order)."""
    fac = factorize(n)
    stack = [(1, ())]
    for p, e in fac:
        stack = [(d * p**i, exps + (i,)) for d, exps in stack for i in range(e + 1)]
    return fac, stack


def nu(p: int, n: int) -> int:
    """p-adic valuation of n >= 1."""
    if n < 1:
        raise ValueError("nu expects n >= 1")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# Multiplicative functions
# ---------------------------------------------------------------------------

def moebius(n: int) -> int:
    """mu(n): 0 if a square divides n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"moebius expects n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def sigma(k: int, n: int) -> int:
    """sigma_k(n) = sum of d^k over divisors d of n (sigma_0 counts divisors)."""
    if n < 1:
        raise ValueError(f"sigma expects n >= 1, got {n}")
    if k < 0:
        raise ValueError("sigma expects k >= 0")
    out = 1
    for p, e in factorize(n):
        if k == 0:
            out *= e + 1
        else:
            out *= (p ** (k * (e + 1)) - 1) // (p**k - 1)
    return out


def sl2_order(d: int) -> int:
    """a(d) = |SL(2, Z/dZ)| = d * sum_{m|d} mu(d/m) m^2.

    Evaluated multiplicatively: a(p^e) = p^(3e-2) (p^2 - 1).
    """
    if d < 1:
        raise ValueError(f"sl2_order expects d >= 1, got {d}")
    out = 1
    for p, e in factorize(d):
        out *= p ** (3 * e - 2) * (p * p - 1)
    return out


def jordan2(m: int) -> int:
    """J_2(m) = m^2 prod_{p|m} (1 - p^-2) = sum_{r|m} mu(r) m^2 / r^2."""
    if m < 1:
        raise ValueError(f"jordan2 expects m >= 1, got {m}")
    out = 1
    for p, e in factorize(m):
        out *= p ** (2 * e - 2) * (p * p - 1)
    return out


def coprime_part(d: int, m: int) -> int:
    """d_m = max{x | d : gcd(x, m) = 1}, the m-coprime part of d."""
    if d < 1 or m < 1:
        raise ValueError("coprime_part expects positive integers")
    g = math.gcd(d, m)
    while g > 1:
        while d % g == 0:
            d //= g
        g = math.gcd(d, g)
    return d


def squarefree_decompose(c: int) -> tuple[int, int]:
    """Write c = c0^2 * c' with c' squarefree; returns (c0, c').

    c may be negative; the sign is carried by the squarefree part c'.
    """
    if c == 0:
        raise ValueError("squarefree_decompose expects c != 0")
    sign = -1 if c < 0 else 1
    c0, cp = 1, 1
    for p, e in factorize(abs(c)):
        c0 *= p ** (e // 2)
        if e % 2:
            cp *= p
    return c0, sign * cp


def is_squarefree(n: int) -> bool:
    return moebius(n) != 0


# ---------------------------------------------------------------------------
# Dirichlet convolution on 1-indexed coefficient sequences
# ---------------------------------------------------------------------------

def dirichlet_convolve(f, g, N: int) -> list[Fraction]:
    """(f*g)(n) = sum_{ab=n} f(a) g(b) for 1 <= n <= N, exact.

    Sequences are 1-indexed dense arrays (index 0 unused) of ExactRational;
    both inputs must be defined up to N.
    """
    if len(f) < N + 1 or len(g) < N + 1:
        raise ValueError("sequences must be defined up to N (1-indexed)")
    out = [Fraction(0)] * (N + 1)
    for a in range(1, N + 1):
        fa = f[a]
        if not fa:
            continue
        for b in range(1, N // a + 1):
            gb = g[b]
            if gb:
                out[a * b] += fa * gb
    return out


def moebius_table(N: int) -> list[int]:
    """mu(n) for 0 <= n <= N via a linear sieve (index 0 unused)."""
    mu = [0] * (N + 1)
    if N >= 1:
        mu[1] = 1
    primes = []
    composite = bytearray(N + 1)
    for i in range(2, N + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > N:
                break
            composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu


# ---------------------------------------------------------------------------
# Bulk sieve tables (exact; int64 only where the bound provably fits)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4)
def sigma_table(N: int) -> np.ndarray:
    """sigma_1(n) for 0 <= n <= N as int64 (entry 0 unused).

    sigma(n) < n * (1 + ln n) for n >= 3, so entries fit int64 for any N that
    fits in memory; the prefix-sum bound is asserted in sigma_prefix.
    """
    sig = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        sig[d::d] += d
    return sig


@lru_cache(maxsize=4)
def sigma_prefix(N: int) -> np.ndarray:
    """Prefix sums S(x) = sum_{e<=x} sigma(e) for 0 <= x <= N, int64."""
    # sum sigma(e) ~ (pi^2/12) N^2, far below 2^63 for any N we sieve.
    assert N < 3 * 10**9, "sigma prefix sums would overflow int64"
    return np.cumsum(sigma_table(N))


@lru_cache(maxsize=4)
def sl2_order_table(N: int) -> list[int]:
    """a(m) for 0 <= m <= N as exact Python ints (entry 0 unused)."""
    out = [0] * (N + 1)
    if N >= 1:
        out[1] = 1
    spf_needed = N < sieve_bound()
    if spf_needed:
        _ensure_sieve()
    for m in range(2, N + 1):
        out[m] = sl2_order(m)
    return out


@lru_cache(maxsize=4)
def jordan2_table(N: int) -> list[int]:
    """J_2(m) for 0 <= m <= N as exact Python ints (entry 0 unused)."""
    out = [0] * (N + 1)
    if N >= 1:
        out[1] = 1
    for m in range(2, N + 1):
        out[m] = jordan2(m)
    return out


# ---------------------------------------------------------------------------
# Hermite normal forms of sublattices of Z^2
# ---------------------------------------------------------------------------

def hermite_sublattices(n: int) -> list[tuple[int, int, int]]:
    """All Hermite normal forms (a, s; 0, c) of index-n sublattices of Z^2.

    Returns the triples (a, s, c) with a*c = n, c > 0 and 0 <= s < a, ordered
    by (a, s).  There are exactly sigma(n) of them.
    """
    if n < 1:
        raise ValueError(f"hermite_sublattices expects n >= 1, got {n}")
    out = []
    for a in divisors(n):
        c = n // a
        for s in range(a):
            out.append((a, s, c))
    return out
