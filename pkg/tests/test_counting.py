"""Cover counts per locus and the brute-force permutation oracle."""

import itertools
from fractions import Fraction

import pytest

from gothicvol.counting import Locus, cd_count, h2_permutation_oracle, smm, sts_count
from gothicvol.euler import chi_W2


def brute_oracle(d):
    """All-pairs reference count (only feasible for tiny d)."""
    import math

    count = 0
    perms = list(itertools.permutations(range(d)))
    for h in perms:
        hinv = [0] * d
        for i, x in enumerate(h):
            hinv[x] = i
        for v in perms:
            vinv = [0] * d
            for i, x in enumerate(v):
                vinv[x] = i
            moved = [i for i in range(d) if h[v[hinv[vinv[i]]]] != i]
            if len(moved) != 3:
                continue
            # transitivity
            seen = {0}
            stack = [0]
            while stack:
                i = stack.pop()
                for j in (h[i], v[i]):
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            if len(seen) == d:
                count += 1
    return Fraction(count, math.factorial(d))


def test_sts_count():
    assert sts_count(Fraction(-1, 2)) == 3
    assert sts_count(Fraction(0)) == 0
    assert sts_count(Fraction(-3, 2)) == 9
    with pytest.raises(ValueError):
        sts_count(Fraction(1, 2))


def test_smm_h2():
    assert smm(Locus.H2, 1).total == 0
    assert smm(Locus.H2, 2).total == 0
    assert smm(Locus.H2, 3).total == 3
    cover = smm(Locus.H2, 5)
    assert cover.contributions[0][:3] == ("W2", 25, None)
    assert cover.total == -6 * chi_W2(25)


def test_smm_p3_components():
    assert [c[:3] for c in smm(Locus.P3, 5).contributions] == [("W4", 25, 1)]
    cover6 = smm(Locus.P3, 6)  # 6 = 2 mod 4: second component at (6/2)^2
    assert [c[:3] for c in cover6.contributions] == [("W4", 36, 1), ("W4", 9, 2)]
    cover8 = smm(Locus.P3, 8)  # 8 = 0 mod 4: single component
    assert [c[:3] for c in cover8.contributions] == [("W4", 64, 1)]


def test_smm_p4():
    assert smm(Locus.P4, 7).total == 0
    assert [c[:3] for c in smm(Locus.P4, 10).contributions] == [("W6", 25, None)]


def test_smm_gothic_dispatch():
    # m = 24: nu_2 = 3, nu_3 = 1 -> components {1, 3}
    got = {c[2]: c[1] for c in smm(Locus.G, 24).contributions}
    assert got == {1: 576, 3: 64}
    # m = 6: nu_2 = nu_3 = 1 -> all four components
    got6 = {c[2]: c[1] for c in smm(Locus.G, 6).contributions}
    assert got6 == {1: 36, 2: 9, 3: 4, 6: 1}
    # m = 10: nu_2 = 1, nu_3 = 0 -> {1, 2}
    got10 = {c[2]: c[1] for c in smm(Locus.G, 10).contributions}
    assert got10 == {1: 100, 2: 25}
    # m = 4: nu_2 = 2 -> {1}
    assert [c[2] for c in smm(Locus.G, 4).contributions] == [1]


def test_cd_count_examples():
    assert cd_count(Locus.H2, 3) == 3
    assert cd_count(Locus.H2, 4) == 9
    assert cd_count(Locus.H2, 6) == 45  # sigma(2)*3 + 36


def test_cd_counts_are_nonneg_integers_for_h2():
    for d in range(1, 60):
        v = cd_count(Locus.H2, d)
        assert v.denominator == 1 and v >= 0


def test_oracle_small_values():
    assert h2_permutation_oracle(1) == 0
    assert h2_permutation_oracle(2) == 0
    assert h2_permutation_oracle(3) == 3
    assert h2_permutation_oracle(4) == 9


def test_oracle_matches_all_pairs_reference():
    for d in (1, 2, 3, 4, 5):
        assert h2_permutation_oracle(d) == brute_oracle(d), d


def test_oracle_matches_cd_count():
    for d in range(1, 8):
        assert h2_permutation_oracle(d) == cd_count(Locus.H2, d), d


def test_oracle_commutator_conventions_agree():
    for d in range(1, 6):
        assert h2_permutation_oracle(d) == h2_permutation_oracle(d, commutator="vh")


def test_oracle_guard():
    with pytest.raises(ValueError):
        h2_permutation_oracle(11)
    with pytest.raises(ValueError):
        h2_permutation_oracle(4, commutator="xy")


def test_locus_dims():
    assert {locus.complex_dim for locus in Locus} == {4}
