"""
Ideals of O_{d^2} and the induced polarisations
===============================================

The order O_{d^2} = {(a1, a2) in Z+Z : a1 = a2 mod d} has, for squarefree n,
one ideal b_r of norm n per divisor r | n, up to the identification
lcm(r, (d,n)) = lcm(s, (d,n)).  The module b_r + O^dual carries the trace
pairing, an integral symplectic form of type (1, n); its restriction to the
two eigenform lines has degrees (lcm(d, r), lcm(d, n/r)) -- the bridge
between the discriminant of a curve and the degree of its torus cover.
"""

from gothicvol.ideals import (
    QuadPair,
    class_count,
    component_list,
    galois_conjugate,
    gram_matrix,
    ideal_basis,
    ideal_membership,
    polarization_restriction,
    symplectic_divisors,
)

d, n = 5, 6
print(f"order O_{{{d}^2}}, ideals of norm {n}:")
print("distinct ideal classes:", class_count(d, n), "with representatives r in",
      component_list(d))
print()

for r in component_list(d):
    spec = ideal_basis(d, n, r)
    basis = [[g.a1, g.a2] for g in spec.basis]
    M = gram_matrix(d, n, r)
    print(f"r = {r}: basis {basis}, index {spec.index_in_order()},"
          f" symplectic type {symplectic_divisors(M)},"
          f" polarisation {polarization_restriction(d, n, r)}")
print()

print("membership test in b_1 (congruences mod d, r, n/r):")
spec = ideal_basis(d, n, 1)
for x in (QuadPair(1, 6), QuadPair(1, 1), QuadPair(0, 30)):
    print(f"   ({x.a1}, {x.a2}) in b_1:", ideal_membership(spec, x))
print()

print("Galois conjugation swaps r and n/r:",
      [(r, galois_conjugate(r, 6)) for r in (1, 2, 3, 6)])
print()

print("the 4x4 trace-pairing Gram matrix for (d, n, r) = (5, 6, 2):")
for row in gram_matrix(5, 6, 2):
    print("   ", row)
