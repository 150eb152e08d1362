"""Consolidated cross-oracle verification suite.

Every invariant stated for the library's modules, at its full stated range,
as a flat list of named checks.  The CLI subcommand ``verify`` and the test
suite both run these; the runner stops loudly at the first violation.

The checks are deliberately redundant with independent routes: prototype
enumeration against modular-form coefficients, divisor-sum formulas against
Euler products, Euler-characteristic counts against brute-force permutation
pairs, closed asymptotic forms against direct summation.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import arith, counting, euler, ideals, prototypes, qforms, volume, zagier
from .arith import (
    divisors,
    hermite_sublattices,
    moebius,
    nu,
    sigma,
    sl2_order,
    sl2_order_table,
)
from .counting import Locus


@dataclass
class CheckResult:
    name: str
    suite: str
    ok: bool
    elapsed_s: float
    detail: str = ""


_CHECKS: list[tuple[str, str, Callable[..., str | None]]] = []


def _check(name: str, suite: str):
    def deco(fn):
        _CHECKS.append((name, suite, fn))
        return fn

    return deco


# ---------------------------------------------------------------------------
# arith
# ---------------------------------------------------------------------------

@_check("sl2_order multiplicative on coprime pairs up to 500", "arith")
def _sl2_multiplicative(threads: int = 1):
    atab = sl2_order_table(500 * 500)
    small = sl2_order_table(500)
    for m in range(1, 501):
        for n in range(m, 501):
            if math.gcd(m, n) == 1:
                assert atab[m * n] == small[m] * small[n], (m, n)
    return "all coprime pairs m,n <= 500"


@_check("(sigma * a)(n) = sigma_3(n) for n <= 10^4", "arith")
def _sigma_conv_identity(threads: int = 1):
    N = 10**4
    atab = sl2_order_table(N)
    f = [Fraction(0)] + [Fraction(sigma(1, n)) for n in range(1, N + 1)]
    g = [Fraction(0)] + [Fraction(atab[n]) for n in range(1, N + 1)]
    conv = arith.dirichlet_convolve(f, g, N)
    for n in range(1, N + 1):
        assert conv[n] == sigma(3, n), n
    return f"dirichlet_convolve at N = {N}"


@_check("moebius inversion roundtrip at N = 2000", "arith")
def _moebius_roundtrip(threads: int = 1):
    N = 2000
    # deterministic pseudo-random exact rationals
    f = [Fraction(0)] + [
        Fraction((n * 2654435761) % 2001 - 1000, n % 7 + 1) for n in range(1, N + 1)
    ]
    one = [Fraction(0)] + [Fraction(1)] * N
    g = arith.dirichlet_convolve(f, one, N)  # g(n) = sum_{m|n} f(m)
    mu = [Fraction(0)] + [Fraction(moebius(n)) for n in range(1, N + 1)]
    back = arith.dirichlet_convolve(g, mu, N)
    assert back[1:] == f[1:]
    return "g = f * 1, then g * mu recovers f exactly"


@_check("hermite_sublattices: sigma(n) forms, each of index n, n <= 200", "arith")
def _hermite_count(threads: int = 1):
    for n in range(1, 201):
        forms = hermite_sublattices(n)
        assert len(forms) == sigma(1, n), n
        assert len(set(forms)) == len(forms)
        for a, s, c in forms:
            assert a * c == n and 0 <= s < a and c > 0
    return "count sigma(n) and determinant a*c = n"


@_check("a(d) = p^(3v-2)(p^2-1) a(d_p) for all p | d, d <= 2000", "arith")
def _a_recursion(threads: int = 1):
    atab = sl2_order_table(2000)
    for d in range(2, 2001):
        for p, _ in arith.factorize(d):
            dp = arith.coprime_part(d, p)
            v = nu(p, d)
            assert atab[d] == p ** (3 * v - 2) * (p * p - 1) * atab[dp], (d, p)
    return "recursion at every prime of every d <= 2000"


# ---------------------------------------------------------------------------
# prototypes
# ---------------------------------------------------------------------------

@_check("prototype invariants and b -> -b parity, D <= 5000, k in {1,6}", "prototypes")
def _prototype_invariants(threads: int = 1):
    checked = 0
    for D in range(4, 5001):
        if D % 4 in (2, 3):
            continue
        f = prototypes.conductor_decompose(D).f
        for k in (1, 6):
            protos = prototypes.enumerate_prototypes(D, k)
            pos = neg = 0
            for p in protos:
                assert p.a > 0 > p.c
                assert p.b * p.b - 4 * k * p.a * p.c == D
                c0, cp = arith.squarefree_decompose(p.c)
                assert c0 * c0 * cp == p.c and arith.is_squarefree(abs(cp))
                assert math.gcd(math.gcd(f, abs(p.b)), c0) == 1
                if p.b > 0:
                    pos += 1
                elif p.b < 0:
                    neg += 1
            assert pos == neg, (D, k)
            checked += len(protos)
    return f"{checked} prototypes re-verified"


@_check("fundamental non-square D <= 1000: e(D,1) equals e_1(D)", "prototypes")
def _fundamental_matches_qexp(threads: int = 1):
    for D in range(5, 1001):
        if D % 4 in (2, 3) or math.isqrt(D) ** 2 == D:
            continue
        if prototypes.conductor_decompose(D).f != 1:
            continue
        e = prototypes.e_value(D, 1)
        assert e == qforms.ek_coeff(1, D), D
        assert (e / 30).denominator <= 30
    return "single-term Moebius inversion at conductor 1"


# ---------------------------------------------------------------------------
# qforms
# ---------------------------------------------------------------------------

@_check("F_k series product equals divisor-sum e_k(n), n <= 4000, k in {1,6}", "qforms")
def _product_vs_direct(threads: int = 1):
    N = 4000
    sig = arith.sigma_table(N)
    for k in (1, 6):
        fk = qforms.fk_expansion(k, N)
        for n in range(N + 1):
            # inline the divisor sum against the sieve (ek_coeff, but fast)
            B = math.isqrt(n)
            total = Fraction(0)
            for b in range(-B, B + 1):
                rem = n - b * b
                if rem % (4 * k) == 0:
                    m = rem // (4 * k)
                    total += Fraction(-1, 24) if m == 0 else int(sig[m])
            assert fk.coeff(n) == total, (k, n)
    return "Cauchy product vs divisor sums, both k"


@_check("e_k(D) = sum_{m|f} e(D/m^2, k), all valid D <= 4000, k in {1,6}", "qforms")
def _e_and_a(threads: int = 1):
    for D in range(4, 4001):
        if D % 4 in (2, 3):
            continue
        for k in (1, 6):
            assert qforms.check_e_and_a(D, k), (D, k)
    return "prototype counts against modular-form coefficients"


@_check("empty residue class gives zero coefficient, k = 6, n <= 1000", "qforms")
def _empty_class_zero(threads: int = 1):
    for n in range(1001):
        bs = [b for b in range(-math.isqrt(n), math.isqrt(n) + 1) if (n - b * b) % 24 == 0]
        if not bs:
            assert qforms.ek_coeff(6, n) == 0, n
    return "scanned n <= 1000"


# ---------------------------------------------------------------------------
# zagier
# ---------------------------------------------------------------------------

@_check("gauss sums vanish beyond r = nu_p(d^2) + 2, p <= 50, d <= 200", "zagier")
def _gamma_truncation(threads: int = 1):
    ps = [p for p in range(2, 51) if arith.is_prime(p)]
    for p in ps:
        for d in range(1, 201):
            v = 2 * nu(p, d)
            for r in range(v + 3, v + 8):
                assert zagier.gauss_gamma(p, r, d) == 0, (p, r, d)
    return "five extra prime-power levels all zero"


@_check("euler factor reduction rules from P_1", "zagier")
def _euler_factor_reduction(threads: int = 1):
    for d in range(1, 101):
        p1_2 = zagier.euler_factor(1, 2, d).value
        g2 = zagier.gauss_gamma(2, 1, d)
        for k in (2, 6):
            assert zagier.euler_factor(k, 2, d).value == 4 * p1_2 - 3 - 3 * g2, (k, d)
        p1_3 = zagier.euler_factor(1, 3, d).value
        for k in (3, 6):
            assert zagier.euler_factor(k, 3, d).value == 9 * p1_3 - 8, (k, d)
    return "p = 2 and p = 3 rules, d <= 100"


@_check("ebar_1 divisor sum equals Euler product with zeta tail, d <= 500", "zagier")
def _ebar1_routes(threads: int = 1):
    for d in range(1, 501):
        assert zagier.ebar1_exact(d) == zagier.ebar1_via_euler_product(d), d
    return "both exact routes equal"


@_check("(12/5) moebius-sum of ebar_1(m^2) equals a(d), d <= 2000", "zagier")
def _ebar1_quadruple_convolution(threads: int = 1):
    atab = sl2_order_table(2000)
    ebar = [Fraction(0)] * 2001
    for m in range(1, 2001):
        ebar[m] = zagier.ebar1_exact(m)
    for d in range(1, 2001):
        s = sum((moebius(d // m) * ebar[m] for m in divisors(d)), Fraction(0))
        assert Fraction(12, 5) * s == atab[d], d
    return "exact quadruple-convolution identity"


@_check("technical lemma identity, k in {2,3,6}, d <= 500", "zagier")
def _technical_lemma(threads: int = 1):
    for k in (2, 3, 6):
        for d in range(1, 501):
            assert zagier.check_technical_lemma(k, d), (k, d)
    return "all 1500 cases"


@_check("moebius-summed ebar_6 equals kappa(d) a(d)/60 exactly, d <= 1000", "zagier")
def _ebar6_kappa(threads: int = 1):
    # The raw ratio ebar_6(d^2) * 60 / a(d) tends to kappa(d) only along
    # d coprime to 6; in the other classes it converges to a factorisation-
    # dependent constant (deviations up to ~30%).  The main-term statement
    # behind the e(d^2, 6) asymptotics is the moebius-summed one, and that
    # turns out to be an exact identity, checked here for every d <= 1000.
    ebar = [Fraction(0)] * 1001
    for m in range(1, 1001):
        ebar[m] = zagier.ebar6_exact(m)
    atab = sl2_order_table(1000)
    for d in range(1, 1001):
        s = sum((moebius(d // m) * ebar[m] for m in divisors(d)), Fraction(0))
        assert 60 * s == zagier.kappa(d) * atab[d], d
    # the coprime-to-6 raw ratio does approach 1/30: within 10% for d >= 500
    for d in range(500, 2001):
        if math.gcd(6, d) == 1:
            ratio = ebar[d] * 30 / atab[d] if d <= 1000 else (
                zagier.ebar6_exact(d) * 30 / sl2_order(d)
            )
            assert abs(ratio - 1) < Fraction(1, 10), d
    return "exact identity in all classes; (6,d)=1 raw ratio within 10%"


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def _lattice_hnf(gens) -> tuple:
    """HNF of the lattice spanned by two QuadPairs (for brute-force equality)."""
    a, b = (gens[0].a1, gens[0].a2), (gens[1].a1, gens[1].a2)
    rows = [list(a), list(b)]
    # integer row reduction to upper triangular
    while rows[1][0]:
        if rows[0][0] == 0 or (rows[1][0] and abs(rows[1][0]) < abs(rows[0][0])):
            rows[0], rows[1] = rows[1], rows[0]
        q = rows[1][0] // rows[0][0]
        rows[1] = [x - q * y for x, y in zip(rows[1], rows[0])]
    if rows[0][0] < 0:
        rows[0] = [-x for x in rows[0]]
    if rows[1][1] < 0:
        rows[1] = [-x for x in rows[1]]
    if rows[1][1]:
        rows[0][1] %= rows[1][1]
    return tuple(rows[0]), tuple(rows[1])


@_check("ideal bases: membership and index 6 in the order, d <= 200, r | 6", "ideals")
def _ideal_bases(threads: int = 1):
    for d in range(2, 201):
        for r in (1, 2, 3, 6):
            spec = ideals.ideal_basis(d, 6, r)
            for g in spec.basis:
                assert ideals.ideal_membership(spec, g), (d, r)
            assert spec.index_in_order() == 6, (d, r)
    return "all divisors r of 6"


@_check("ideal_equal matches brute-force lattice equality, d <= 100", "ideals")
def _ideal_equal_brute(threads: int = 1):
    for d in range(2, 101):
        rs = (1, 2, 3, 6)
        hnfs = {r: _lattice_hnf(ideals.ideal_basis(d, 6, r).basis) for r in rs}
        for r in rs:
            for s in rs:
                assert ideals.ideal_equal(d, 6, r, s) == (hnfs[r] == hnfs[s]), (d, r, s)
    return "lcm criterion vs HNF comparison"


@_check("galois conjugation swaps b_r and b_{6/r}, d <= 100", "ideals")
def _galois_swap(threads: int = 1):
    for d in range(2, 101):
        for r in (1, 2, 3, 6):
            src = ideals.ideal_basis(d, 6, r)
            dst = ideals.ideal_basis(d, 6, ideals.galois_conjugate(r, 6))
            for g in src.basis:
                assert ideals.ideal_membership(dst, g.conjugate()), (d, r)
            for g in dst.basis:
                assert ideals.ideal_membership(src, g.conjugate()), (d, r)
    return "membership of conjugated generators both ways"


@_check("class_count = sigma_0(6/(d,6)) = deduplicated ideal count, d <= 500", "ideals")
def _class_count_dedup(threads: int = 1):
    for d in range(2, 501):
        distinct = []
        for r in (1, 2, 3, 6):
            if not any(ideals.ideal_equal(d, 6, r, s) for s in distinct):
                distinct.append(r)
        assert ideals.class_count(d, 6) == len(distinct), d
        assert sorted(distinct) == ideals.component_list(d), d
    return "dedup by ideal_equal matches the sigma_0 rule"


@_check("trace pairing has symplectic type (1,6), d <= 200", "ideals")
def _symplectic_type(threads: int = 1):
    for d in range(2, 201):
        for r in ideals.component_list(d):
            M = ideals.gram_matrix(d, 6, r)
            assert all(M[i][j] == -M[j][i] for i in range(4) for j in range(4))
            assert ideals.symplectic_divisors(M) == (1, 6), (d, r)
    return "congruence reduction on every component"


@_check("polarization restriction = (lcm(d,r), lcm(d,6/r)), d <= 500", "ideals")
def _polarization(threads: int = 1):
    for d in range(2, 501):
        for r in ideals.component_list(d):
            got = ideals.polarization_restriction(d, 6, r)
            assert got == (math.lcm(d, r), math.lcm(d, 6 // r)), (d, r, got)
    return "eigenform sublattice pairing on every component"


# ---------------------------------------------------------------------------
# euler
# ---------------------------------------------------------------------------

@_check("chi(X_{d^2}) = a(d)/72 against the mu-sum definition, d <= 5000", "euler")
def _chi_x_square(threads: int = 1):
    for d in range(1, 5001):
        mu_sum = sum(Fraction(moebius(r), r * r) for r in divisors(d))
        assert euler.chi_X_square(d) == Fraction(d**3, 72) * mu_sum, d
    return "both formulas agree"


@_check("-6 chi(W_{m^2}(2)) is a nonnegative integer, zero iff m = 2, m <= 2000", "euler")
def _w2_integrality(threads: int = 1):
    for m in range(2, 2001):
        v = -6 * euler.chi_W2(m * m)
        assert v.denominator == 1 and v >= 0, m
        assert (v == 0) == (m == 2), m
    return "orbifold counts are honest integers"


@_check("gothic non-square non-emptiness exactly on the residue set, D <= 2000", "euler")
def _gothic_residues(threads: int = 1):
    for D in range(5, 2001):
        if D % 4 in (2, 3) or math.isqrt(D) ** 2 == D:
            continue
        rec = euler.chi_G(D, 1, "exact")
        assert rec.empty == (D % 24 not in euler.GOTHIC_RESIDUES), D
        if not rec.empty:
            assert rec.value < 0, D
    return "emptiness scan"


@_check("main_term vs leading gap, scaled by d^(5/2), half-range check, d <= 2000", "euler")
def _main_vs_leading(threads: int = 1):
    dmax = 2000
    euler.precompute_e_square(6, dmax)
    gaps = [0.0] * (dmax + 1)
    for d in range(1, dmax + 1):
        main = euler.chi_G(d * d, 1, "main_term").value
        lead = euler.chi_G(d * d, 1, "leading").value
        gaps[d] = float(abs(main - lead)) / float(d) ** 2.5
    hi = max(gaps[dmax // 2 + 1 :])
    lo = max(gaps[dmax // 4 + 1 : dmax // 2 + 1])
    assert hi <= lo, (hi, lo)
    return f"max gap {max(gaps):.4f}, upper half {hi:.4f} <= lower half {lo:.4f}"


@_check("components offered by chi_G(d^2, r) equal component_list(d), d <= 200", "euler")
def _chi_g_components(threads: int = 1):
    for d in range(2, 201):
        offered = []
        for r in (1, 2, 3, 6):
            try:
                euler.chi_G(d * d, r, "main_term")
                offered.append(r)
            except ValueError:
                pass
        assert offered == ideals.component_list(d), d
    return "validation mirrors the ideal classes"


@_check("remark values sit inside the boundary sandwich, d <= 500", "euler")
def _remark_sandwich(threads: int = 1):
    euler.precompute_e_square(6, 500)
    for d in range(2, 501):
        main = euler.chi_G(d * d, 1, "main_term").value
        remark = euler.chi_G(d * d, 1, "remark").value
        gap = euler.chi_boundary_gap(d, 1)
        assert main <= remark <= main + gap, d
    return "main <= remark <= main + (9/d) chi(X(b_r))"


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

@_check("permutation oracle equals cd_count(H2, d), d = 1..8", "counting")
def _oracle_vs_cd(threads: int = 1):
    for d in range(1, 9):
        got = counting.h2_permutation_oracle(d, threads=threads)
        want = counting.cd_count(Locus.H2, d)
        assert got == want, (d, got, want)
    return "exact equality through d = 8"


@_check("commutator convention invariance, d <= 6", "counting")
def _commutator_convention(threads: int = 1):
    for d in range(1, 7):
        assert counting.h2_permutation_oracle(d) == counting.h2_permutation_oracle(
            d, commutator="vh"
        ), d
    return "h v h^-1 v^-1 vs v h v^-1 h^-1"


@_check("smm/cd consistency and hermite tie-back, d <= 200", "counting")
def _smm_cd_consistency(threads: int = 1):
    for locus in (Locus.H2, Locus.P4):
        totals = {m: counting.smm(locus, m).total for m in range(1, 201)}
        for d in range(1, 201):
            direct = counting.cd_count(locus, d)
            recomposed = sum(
                (sigma(1, d // m) * totals[m] for m in divisors(d)), Fraction(0)
            )
            assert direct == recomposed, (locus, d)
            for m in divisors(d):
                assert len(hermite_sublattices(d // m)) == sigma(1, d // m)
    return "sigma-weighted recomposition and HNF counts"


@_check("gothic leading smm totals are nonnegative, m <= 5000", "counting")
def _gothic_leading_nonneg(threads: int = 1):
    for m in range(1, 5001):
        assert counting.smm(Locus.G, m, "leading").total >= 0, m
    return "no negative weighted counts"


@_check("P3 second component appears iff m = 2 mod 4, with (m/2)^2 = 1 mod 8", "counting")
def _p3_gating(threads: int = 1):
    for m in range(1, 501):
        cover = counting.smm(Locus.P3, m)
        has_second = any(comp == 2 for _, _, comp, _ in cover.contributions)
        assert has_second == (m % 4 == 2), m
        if has_second:
            assert (m // 2) % 2 == 1 and ((m // 2) ** 2) % 8 == 1, m
    return "component gating matches the discriminant residue"


# ---------------------------------------------------------------------------
# volume
# ---------------------------------------------------------------------------

@_check("(sigma * a)(d) = sigma_3(d) termwise and S_1 at 10^5", "volume")
def _s1_identity(threads: int = 1):
    import numpy as np

    N = 10**5
    atab = sl2_order_table(N)
    sig = arith.sigma_table(N)
    sig3 = np.zeros(N + 1, dtype=np.int64)
    for q in range(1, N + 1):
        sig3[q::q] += q**3  # max sigma_3 here ~ 2.5e15, safely inside int64
    total = 0
    for d in range(1, N + 1):
        conv = sum(int(sig[d // m]) * atab[m] for m in divisors(d))
        s3 = int(sig3[d])
        assert conv == s3, d
        total += s3
    assert volume.sk_sum(1, N) == total
    return "prefix sums of sigma_3 match S_1"


@_check("S_k asymptotics: ratio in [0.99, 1.01] at 10^5, O(1/D) deviation", "volume")
def _sk_asymptotics(threads: int = 1):
    N = 10**5
    for k in (1, 2, 3, 6):
        c = volume.sk_asymptotic_constant(k).to_float()
        ratio = volume.sk_sum(k, N) / (c * N**4)
        assert 0.99 <= ratio <= 1.01, (k, ratio)
        # measured dev * D stays below ~5 for all four k; assert the O(1/D)
        # envelope, and halving up to the envelope floor (the raw deviations
        # oscillate through zero once they reach ~1e-5, so strict halving
        # is not a property of the partial sums there)
        for D in (1000, 2000, 5000, 10000, 25000, 50000):
            dev1 = abs(volume.sk_sum(k, D) / (c * D**4) - 1)
            dev2 = abs(volume.sk_sum(k, 2 * D) / (c * (2 * D) ** 4) - 1)
            assert dev1 <= 8.0 / D, (k, D, dev1)
            assert dev2 <= max(dev1, 8.0 / (2 * D)), (k, D, dev1, dev2)
    return "all four k inside the 8/D envelope"


@_check("P4 direct equals closed at every D <= 2000; P3 and gothic too", "volume")
def _direct_vs_closed(threads: int = 1):
    Dmax = 2000
    s1 = volume.sk_prefix(1, Dmax)
    s2 = volume.sk_prefix(2, Dmax)
    p4 = volume.direct_prefix(Locus.P4, Dmax)
    p3 = volume.direct_prefix(Locus.P3, Dmax)
    for D in range(1, Dmax + 1):
        assert p4[D] == Fraction(7, 12) * s1[D // 2], ("P4", D)
        closed_p3 = (
            Fraction(5, 24) * s1[D]
            + Fraction(5, 48) * s2[D]
            + Fraction(5, 24) * (s1[D // 2] - s2[D // 2])
        )
        assert p3[D] == closed_p3, ("P3", D)
    # gothic leading: agreement up to floor-boundary terms, bounded by D^3
    totals = volume.smm_totals(Locus.G, Dmax, "leading")
    for D in (500, 1000, 1500, 2000):
        gap = abs(volume.direct_raw_sum(totals, D) - volume.closed_raw_sum(Locus.G, D))
        assert gap <= D**3, (D, gap)
    return "P4/P3 exact at every D; gothic gap within O(D^3)"


@_check("gothic closed summands match their exact limits within 2% at D = 4000", "volume")
def _gothic_summands(threads: int = 1):
    D = 4000
    details = []
    for r in (1, 2, 3, 6):
        got = float(volume.gothic_closed_summand(r, D // r)) / D**4
        want = volume.GOTHIC_SUMMAND_LIMITS[r].to_float()
        rel = abs(got - want) / want
        assert rel <= 0.02, (r, rel)
        details.append(f"r={r}: {rel:.4f}")
    total = sum(
        (volume.GOTHIC_SUMMAND_LIMITS[r] for r in (2, 3, 6)),
        volume.GOTHIC_SUMMAND_LIMITS[1],
    )
    assert total.coeff == Fraction(13, 31104) and total.pi_power == 4
    return "; ".join(details)


@_check("volume estimators inside the acceptance tolerances", "volume")
def _estimator_errors(threads: int = 1):
    h2 = volume.volume_estimate(Locus.H2, 4000)
    assert h2.relative_error <= 0.01, h2.relative_error
    p3 = volume.volume_estimate(Locus.P3, 4000)
    p4 = volume.volume_estimate(Locus.P4, 4000)
    assert p3.relative_error <= 0.02 and p4.relative_error <= 0.02
    g = volume.volume_estimate(Locus.G, 2000, "direct", "main")
    assert g.relative_error <= 0.05 and g.extrapolated_relative_error <= 0.01
    return (
        f"H2 {h2.relative_error:.2e}, P3 {p3.relative_error:.2e}, "
        f"P4 {p4.relative_error:.2e}, G {g.relative_error:.2e}"
        f" (extrap {g.extrapolated_relative_error:.2e})"
    )


@_check("AEZ conversion constants are reproduced exactly", "volume")
def _aez_constants(threads: int = 1):
    p3 = volume.convert_convention(Locus.P3)
    p4 = volume.convert_convention(Locus.P4)
    assert (p3.coeff, p3.pi_power) == (Fraction(5, 9), 4)
    assert (p4.coeff, p4.pi_power) == (Fraction(28, 135), 4)
    assert 2**4 * 2**3 * 6 == 768 and Fraction(5, 6912) * 768 == Fraction(5, 9)
    return "5 pi^4/9 and 28 pi^4/135 from the factor chains"


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

SUITES = (
    "all",
    "arith",
    "prototypes",
    "qforms",
    "zagier",
    "ideals",
    "euler",
    "counting",
    "volume",
)


def run_suite(
    suite: str = "all", threads: int = 1, report=print, stop_on_failure: bool = True
) -> list[CheckResult]:
    """Run the named suite (or all), reporting one line per check.

    Stops at the first violation unless told otherwise; the returned list
    carries per-check status and timings.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results = []
    for name, group, fn in _CHECKS:
        if suite != "all" and group != suite:
            continue
        t0 = time.perf_counter()
        try:
            detail = fn(threads=threads) or ""
            ok = True
        except AssertionError as exc:
            detail = f"FAILED at {exc.args[0] if exc.args else '?'}"
            ok = False
        elapsed = time.perf_counter() - t0
        results.append(CheckResult(name, group, ok, elapsed, detail))
        status = "PASS" if ok else "FAIL"
        if report:
            report(f"[{status}] ({group}) {name} [{elapsed:.2f}s] {detail}")
        if not ok and stop_on_failure:
            break
    return results
