"""Unit tests for the exact-arithmetic substrate.

Expected values are either hand-checkable or frozen from an independent
brute-force oracle computed in this file (divisor loops, matrix enumeration).
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gothicvol import arith
from gothicvol.arith import (
    PiQuantity,
    coprime_part,
    dirichlet_convolve,
    divisors,
    factorize,
    hermite_sublattices,
    jordan2,
    moebius,
    sigma,
    sl2_order,
    squarefree_decompose,
)


def brute_sigma(k, n):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def brute_moebius(n):
    if n == 1:
        return 1
    for p in range(2, n + 1):
        if n % (p * p) == 0:
            return 0
    count = sum(1 for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p)))
    return (-1) ** count


def brute_sl2_order(d):
    count = 0
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for e in range(d):
                    if (a * e - b * c) % d == 1 % d:
                        count += 1
    return count


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(12) == 0
    assert moebius(6) == 1  # two prime factors


def test_moebius_brute_force():
    for n in range(1, 200):
        assert moebius(n) == brute_moebius(n), n


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def test_sigma_examples():
    assert sigma(1, 1) == 1
    assert sigma(3, 2) == 9  # 1 + 8
    assert sigma(0, 6) == 4  # divisors 1, 2, 3, 6
    with pytest.raises(ValueError):
        sigma(1, 0)


def test_sigma_brute_force():
    for n in range(1, 150):
        for k in (0, 1, 2, 3):
            assert sigma(k, n) == brute_sigma(k, n)


def test_sl2_order_examples():
    assert sl2_order(1) == 1
    assert sl2_order(2) == 6
    # 216 * (3/4) * (8/9) = 144
    assert sl2_order(6) == 144
    with pytest.raises(ValueError):
        sl2_order(0)


def test_sl2_order_matches_matrix_enumeration():
    for d in range(1, 13):
        assert sl2_order(d) == brute_sl2_order(d), d


def test_sl2_order_is_mu_sum():
    for d in range(1, 300):
        assert sl2_order(d) == d * sum(moebius(d // m) * m * m for m in divisors(d))


def test_coprime_part_examples():
    assert coprime_part(12, 2) == 3
    assert coprime_part(12, 6) == 1
    assert coprime_part(7, 10) == 7


@settings(deadline=None)  # the first example may pay the one-off sieve build
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_coprime_part_is_largest_coprime_divisor(d, m):
    dm = coprime_part(d, m)
    assert d % dm == 0 and math.gcd(dm, m) == 1
    assert math.gcd(d // dm, dm) == 1 or all(
        math.gcd(p, m) > 1 for p, _ in factorize(d // dm)
    )
    # every prime of d/dm divides m
    for p, _ in factorize(d // dm):
        assert m % p == 0


def test_squarefree_decompose_examples():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(-8) == (2, -2)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


@settings(deadline=None)
@given(st.integers(-10**6, 10**6).filter(lambda c: c != 0))
def test_squarefree_decompose_roundtrip(c):
    c0, cp = squarefree_decompose(c)
    assert c0 > 0
    assert c0 * c0 * cp == c
    assert arith.is_squarefree(abs(cp))
    assert (cp < 0) == (c < 0)


def test_jordan2():
    assert jordan2(1) == 1 and jordan2(2) == 3 and jordan2(6) == 24
    for m in range(1, 100):
        assert jordan2(m) == sum(moebius(r) * (m // r) ** 2 for r in divisors(m))


def test_dirichlet_convolve_identities():
    N = 120
    sig = [Fraction(0)] + [Fraction(sigma(1, n)) for n in range(1, N + 1)]
    a = [Fraction(0)] + [Fraction(sl2_order(n)) for n in range(1, N + 1)]
    conv = dirichlet_convolve(sig, a, N)
    assert conv[2] == 9 == sigma(3, 2)
    for n in range(1, N + 1):
        assert conv[n] == sigma(3, n)

    mu = [Fraction(0)] + [Fraction(moebius(n)) for n in range(1, N + 1)]
    one = [Fraction(0)] + [Fraction(1)] * N
    unit = dirichlet_convolve(mu, one, N)
    assert unit[1] == 1 and all(unit[n] == 0 for n in range(2, N + 1))

    j3 = [Fraction(0)] + [Fraction(n**3) for n in range(1, N + 1)]
    jmu = [Fraction(0)] + [Fraction(n * moebius(n)) for n in range(1, N + 1)]
    conv2 = dirichlet_convolve(j3, jmu, N)
    assert conv2[6] == 144 == sl2_order(6)
    for n in range(1, N + 1):
        assert conv2[n] == sl2_order(n)


def test_dirichlet_convolve_length_mismatch():
    with pytest.raises(ValueError):
        dirichlet_convolve([Fraction(0), Fraction(1)], [Fraction(0)], 1)


def test_hermite_sublattices_examples():
    assert hermite_sublattices(1) == [(1, 0, 1)]
    assert hermite_sublattices(2) == [(1, 0, 2), (2, 0, 1), (2, 1, 1)]
    assert len(hermite_sublattices(12)) == 28 == sigma(1, 12)


def test_hermite_sublattices_are_distinct_index_n():
    for n in range(1, 60):
        forms = hermite_sublattices(n)
        assert len(forms) == sigma(1, n)
        # (a, s; 0, c) generates a lattice of index a*c; distinct forms give
        # distinct lattices (membership of (1,0)*a and (s,c) normalises them)
        assert len(set(forms)) == len(forms)
        for a, s, c in forms:
            assert a * c == n


def test_factorize_and_factored_integer():
    assert factorize(1) == ()
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    fi = arith.FactoredInteger.of(360)
    assert fi.value == 360
    assert math.prod(p**e for p, e in fi.factors) == 360
    primes = [p for p, _ in fi.factors]
    assert primes == sorted(primes)


def test_factorize_beyond_sieve_uses_trial_division():
    n = 10**14 + 37  # beyond any configured sieve bound
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac) == n


def test_pi_quantity_algebra():
    x = PiQuantity(Fraction(13, 31104), 4)
    y = PiQuantity(Fraction(1, 960), 4)
    assert (x + y).pi_power == 4
    assert x * PiQuantity(Fraction(15), -2) == PiQuantity(Fraction(13 * 15, 31104), 2)
    assert (3 * y).coeff == Fraction(1, 320)
    with pytest.raises(ValueError):
        _ = x + PiQuantity(Fraction(1), 2)
    with pytest.raises(ValueError):
        PiQuantity(Fraction(1), 2).as_rational()
    assert PiQuantity(Fraction(3, 2), 0).as_rational() == Fraction(3, 2)
    assert abs(y.to_float() - math.pi**4 / 960) < 1e-15


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.integers(-3, 3),
    st.integers(-3, 3),
)
def test_pi_quantity_mul_adds_powers(c1, c2, p1, p2):
    a, b = PiQuantity(c1, p1), PiQuantity(c2, p2)
    prod = a * b
    assert prod.coeff == c1 * c2 and prod.pi_power == p1 + p2
    if p1 == p2:
        assert (a + b).coeff == c1 + c2


def test_sigma_tables_match_pointwise():
    N = 500
    sig = arith.sigma_table(N)
    pre = arith.sigma_prefix(N)
    acc = 0
    for n in range(1, N + 1):
        assert int(sig[n]) == sigma(1, n)
        acc += sigma(1, n)
        assert int(pre[n]) == acc
    atab = arith.sl2_order_table(N)
    for n in range(1, N + 1):
        assert atab[n] == sl2_order(n)
