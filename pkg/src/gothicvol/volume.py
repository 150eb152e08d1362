"""Masur-Veech volume estimators from lattice-point counts.

The volume of the area-1 locus is the limit of (1/D^dim) sum_{d<=D} |C_d|,
where |C_d| = sum_{m|d} sigma(d/m) |S_{m,m}| counts torus covers of degree d.
Two evaluation paths are implemented:

    direct -- sum the cover counts of ``counting`` (exact Fractions all the
              way; floats only in the final division by D^dim);
    closed -- the locus-specific combinations of the sums

                  S_k(D) = sum_{d<=D} sum_{m|d, k|m} sigma(d/m) a(m)

              H(2):  (3/8) S_1(D) - (3/4) T(D),  T the Jordan-totient analogue
              P3:    (5/24) S_1(D) + (5/48) S_2(D)
                        + (5/24)(S_1(D/2) - S_2(D/2))
              P4:    (7/12) S_1(D/2)
              G:     sum over r of an inclusion-exclusion combination at D/r,
                     one row per component class, each pinned against its
                     exact large-D limit.

S_k(D) ~ pi^4 D^4 / 360 times prod (p+1)/(p^2+p+1) over primes p | k.  Since
the leading error of the partial sums is O(1/D) relative, the estimator also
reports the Richardson extrapolation 2 V(D) - V(D/2).

Exact targets: vol H(2) = pi^4/960, P3 = 5 pi^4/6912, P4 = 7 pi^4/69120,
gothic = 13 pi^4/31104.  The AEZ quadratic-differential normalisation differs
by the factor chains 2^4 * 2^3 * 3! (P3) and 2^8 * 2^3 (P4), giving
5 pi^4/9 and 28 pi^4/135.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    PiQuantity,
    divisors,
    factorize,
    jordan2_table,
    sigma,
    sigma_prefix,
    sl2_order_table,
)
from .counting import Locus, smm
from .euler import precompute_e_square

_SURROGATES = {"main": "main_term", "main_term": "main_term",
               "leading": "leading", "remark": "remark"}


@dataclass
class VolumeEstimate:
    locus: Locus
    D: int
    mode: str
    surrogate: str
    value: float
    extrapolated: float
    exact_target: PiQuantity
    relative_error: float
    extrapolated_relative_error: float
    series: list[tuple[int, float]] = field(default_factory=list)
    series_exact: list[tuple[int, Fraction]] = field(default_factory=list, repr=False)


def sk_sum(k: int, D: int) -> int:
    """S_k(D) = sum_{d<=D} sum_{m|d, (m,k)=k} sigma(d/m) a(m), exact.

    Evaluated as sum over multiples m of k of a(m) * (sum_{e<=D/m} sigma(e));
    the accumulation is arbitrary-precision (the int64 sieve tables feed it).
    """
    if D < 1 or k < 1:
        raise ValueError("need k, D >= 1")
    ssig = sigma_prefix(D)
    atab = sl2_order_table(D)
    total = 0
    for m in range(k, D + 1, k):
        total += atab[m] * int(ssig[D // m])
    return total


def t_sum(D: int) -> int:
    """T(D) = sum_{d<=D} sum_{m|d} sigma(d/m) J_2(m), the genus-2 correction."""
    ssig = sigma_prefix(D)
    jtab = jordan2_table(D)
    return sum(jtab[m] * int(ssig[D // m]) for m in range(1, D + 1))


def sk_prefix(k: int, Dmax: int) -> list[int]:
    """S_k(D) for every D <= Dmax (entry 0 = 0), built incrementally."""
    atab = sl2_order_table(Dmax)
    out = [0] * (Dmax + 1)
    acc = 0
    for d in range(1, Dmax + 1):
        for m in divisors(d):
            if m % k == 0:
                acc += sigma(1, d // m) * atab[m]
        out[d] = acc
    return out


def sk_asymptotic_constant(k: int) -> PiQuantity:
    """S_k(D)/D^4 -> pi^4/360 * prod_{p | k} (p+1)/(p^2+p+1)."""
    if k not in (1, 2, 3, 6):
        raise ValueError("supported k: 1, 2, 3, 6")
    coeff = Fraction(1, 360)
    for p, _ in factorize(k):
        coeff *= Fraction(p + 1, p * p + p + 1)
    return PiQuantity(coeff, 4)


def volume_exact(locus: Locus) -> PiQuantity:
    """The exact Masur-Veech volume of the locus."""
    return {
        Locus.H2: PiQuantity(Fraction(1, 960), 4),
        Locus.P3: PiQuantity(Fraction(5, 6912), 4),
        Locus.P4: PiQuantity(Fraction(7, 69120), 4),
        Locus.G: PiQuantity(Fraction(13, 31104), 4),
    }[locus]


def convert_convention(locus: Locus) -> PiQuantity:
    """AEZ-normalised volume of the quadratic-differential stratum under the
    Prym double cover: lattice index, area disintegration and pole numbering.

    vol_AEZ(Q(-1^3, 3)) = 2^4 * 2^3 * 3! * vol(P3) = 5 pi^4 / 9
    vol_AEZ(Q(-1, 5))   = 2^8 * 2^3      * vol(P4) = 28 pi^4 / 135
    """
    if locus is Locus.P3:
        return volume_exact(locus) * (2**4 * 2**3 * 6)
    if locus is Locus.P4:
        return volume_exact(locus) * (2**8 * 2**3)
    raise ValueError("the AEZ conversion applies to P3 and P4 only")


# ---------------------------------------------------------------------------
# Direct path
# ---------------------------------------------------------------------------

def smm_totals(locus: Locus, mmax: int, surrogate: str = "main_term") -> list[Fraction]:
    """|S_{m,m}| totals for 1 <= m <= mmax (entry 0 unused)."""
    mode = _SURROGATES[surrogate]
    if locus is Locus.G:
        precompute_e_square(6, mmax)
    totals = [Fraction(0)] * (mmax + 1)
    for m in range(1, mmax + 1):
        totals[m] = smm(locus, m, mode).total
    return totals


def direct_raw_sum(totals: list[Fraction], D: int) -> Fraction:
    """sum_{d<=D} |C_d| = sum_{m<=D} |S_{m,m}| * (sum_{e<=D/m} sigma(e))."""
    ssig = sigma_prefix(D)
    acc = Fraction(0)
    for m in range(1, D + 1):
        t = totals[m]
        if t:
            acc += t * int(ssig[D // m])
    return acc


def direct_prefix(locus: Locus, Dmax: int, surrogate: str = "main_term") -> list[Fraction]:
    """Partial sums sum_{d<=D} |C_d| for every D <= Dmax (entry 0 = 0)."""
    totals = smm_totals(locus, Dmax, surrogate)
    out = [Fraction(0)] * (Dmax + 1)
    acc = Fraction(0)
    for d in range(1, Dmax + 1):
        cd = Fraction(0)
        for m in divisors(d):
            t = totals[m]
            if t:
                cd += sigma(1, d // m) * t
        acc += cd
        out[d] = acc
    return out


# ---------------------------------------------------------------------------
# Closed path
# ---------------------------------------------------------------------------

# gothic inclusion-exclusion combinations: coefficients of (S_1, S_2, S_3, S_6)
# evaluated at floor(D/r), obtained by splitting the m-sum over the congruence
# classes of gcd(6, m/r) and collecting the kappa' leading constants.
_GOTHIC_CLOSED = {
    1: (Fraction(13, 720), (6, 3, 2, 1)),
    2: (Fraction(13, 360), (3, -3, 1, -1)),
    3: (Fraction(13, 240), (2, 1, -2, -1)),
    6: (Fraction(13, 120), (1, -1, -1, 1)),
}

# exact large-D limits of the four summands, as coefficients of pi^4
GOTHIC_SUMMAND_LIMITS = {
    1: PiQuantity(Fraction(17 * 43, 2**7 * 3**4 * 5**2 * 7), 4),
    2: PiQuantity(Fraction(43, 2**8 * 3**4 * 5**2 * 7), 4),
    3: PiQuantity(Fraction(17, 2**7 * 3**5 * 5**2 * 7), 4),
    6: PiQuantity(Fraction(1, 2**8 * 3**5 * 5**2 * 7), 4),
}


def gothic_closed_summand(r: int, X: int) -> Fraction:
    """The r-component closed form at argument X = floor(D/r)."""
    coeff, weights = _GOTHIC_CLOSED[r]
    if X < 1:
        return Fraction(0)
    s = [sk_sum(k, X) for k in (1, 2, 3, 6)]
    return coeff * sum(w * v for w, v in zip(weights, s))


def closed_raw_sum(locus: Locus, D: int) -> Fraction:
    """The closed-form S_k combination for sum_{d<=D} |C_d|."""
    if locus is Locus.H2:
        return Fraction(3, 8) * sk_sum(1, D) - Fraction(3, 4) * t_sum(D)
    if locus is Locus.P3:
        half = D // 2
        inner = (sk_sum(1, half) - sk_sum(2, half)) if half >= 1 else 0
        return (
            Fraction(5, 24) * sk_sum(1, D)
            + Fraction(5, 48) * sk_sum(2, D)
            + Fraction(5, 24) * inner
        )
    if locus is Locus.P4:
        half = D // 2
        return Fraction(7, 12) * (sk_sum(1, half) if half >= 1 else 0)
    if locus is Locus.G:
        return sum(
            (gothic_closed_summand(r, D // r) for r in (1, 2, 3, 6)), Fraction(0)
        )
    raise ValueError(f"unsupported locus {locus}")


# ---------------------------------------------------------------------------
# The estimator
# ---------------------------------------------------------------------------

def volume_estimate(
    locus: Locus, D: int, mode: str = "direct", surrogate: str = "main_term"
) -> VolumeEstimate:
    """Partial-sum volume estimate with checkpoints at D/8, D/4, D/2, D and
    the Richardson extrapolation 2 V(D) - V(D/2) (the relative error of the
    raw estimator is O(1/D))."""
    if D < 12:
        raise ValueError("need D >= 12")
    if mode not in ("direct", "closed"):
        raise ValueError("mode must be 'direct' or 'closed'")
    surrogate = _SURROGATES[surrogate]
    if surrogate == "remark" and locus is not Locus.G:
        raise ValueError("the remark surrogate applies to the gothic locus only")
    dim = locus.complex_dim
    checkpoints = [D // 8, D // 4, D // 2, D]
    if mode == "direct":
        totals = smm_totals(locus, D, surrogate)
        raw = {Dc: direct_raw_sum(totals, Dc) for Dc in checkpoints}
    else:
        raw = {Dc: closed_raw_sum(locus, Dc) for Dc in checkpoints}
    series_exact = [(Dc, raw[Dc]) for Dc in checkpoints]
    series = [(Dc, float(raw[Dc]) / Dc**dim) for Dc in checkpoints]
    value = series[-1][1]
    v_half = series[-2][1]
    extrapolated = 2.0 * value - v_half
    target = volume_exact(locus)
    tf = target.to_float()
    return VolumeEstimate(
        locus=locus,
        D=D,
        mode=mode,
        surrogate=surrogate,
        value=value,
        extrapolated=extrapolated,
        exact_target=target,
        relative_error=abs(value - tf) / tf,
        extrapolated_relative_error=abs(extrapolated - tf) / tf,
        series=series,
        series_exact=series_exact,
    )
