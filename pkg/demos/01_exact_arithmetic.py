"""
Exact arithmetic substrate
==========================

Everything in this library is computed in exact arithmetic: arbitrary
precision integers, fractions.Fraction rationals, and PiQuantity values
(an exact rational times an integer power of pi).  This walk-through shows
the multiplicative functions and lattice enumeration the rest builds on.
"""

from fractions import Fraction

from gothicvol.arith import (
    PiQuantity,
    coprime_part,
    dirichlet_convolve,
    hermite_sublattices,
    moebius,
    sigma,
    sl2_order,
    squarefree_decompose,
)

print("Moebius function:", [(n, moebius(n)) for n in range(1, 13)])
print("Divisor sums sigma_1:", [(n, sigma(1, n)) for n in range(1, 13)])
print()

# a(d) = |SL(2, Z/d)| drives every Euler characteristic of a square
# discriminant; it is d * sum_{m|d} mu(d/m) m^2 and multiplicative.
print("a(d) = |SL(2, Z/d)| for d = 1..12:")
print("  ", [sl2_order(d) for d in range(1, 13)])
print("  multiplicative: a(6) =", sl2_order(6), "= a(2)*a(3) =", sl2_order(2) * sl2_order(3))
print()

# Dirichlet convolution in exact rationals: sigma * a = sigma_3.
N = 24
f = [Fraction(0)] + [Fraction(sigma(1, n)) for n in range(1, N + 1)]
g = [Fraction(0)] + [Fraction(sl2_order(n)) for n in range(1, N + 1)]
conv = dirichlet_convolve(f, g, N)
print("(sigma * a)(n) vs sigma_3(n), n <= 10:")
for n in range(1, 11):
    print(f"   n={n:2d}: {conv[n]} = {sigma(3, n)}")
print()

# Coprime parts and squarefree decompositions feed the Gauss-sum machinery.
print("coprime_part(360, 6) =", coprime_part(360, 6))
print("squarefree_decompose(-360) =", squarefree_decompose(-360), "(c0, c') with c = c0^2 c'")
print()

# Sublattices of Z^2 of index n in Hermite normal form (a, s; 0, c):
# there are exactly sigma(n) of them -- the combinatorial heart of the
# relation |C_d| = sum sigma(d/m) |S_{m,m}|.
for n in (2, 4):
    print(f"index-{n} sublattices of Z^2:", hermite_sublattices(n))
print("count at n = 12:", len(hermite_sublattices(12)), "= sigma(12) =", sigma(1, 12))
print()

# PiQuantity keeps pi powers symbolic until they cancel.
vol = PiQuantity(Fraction(13, 31104), 4)
tail = PiQuantity(Fraction(15), -2)  # zeta(2)/zeta(4) = 15/pi^2
print("13/31104 pi^4 * (15/pi^2) =", vol * tail)
print("float value of the gothic volume:", vol.to_float())
