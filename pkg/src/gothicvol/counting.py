"""Square-tiled surface counts from Euler characteristics, and the independent
permutation-pair oracle for the minimal stratum in genus 2.

A minimal torus cover of degree and area m on an arithmetic Teichmueller
curve contributes to |S_{m,m}|, which equals -6 chi(C) of the curve.  The
distribution of these covers among curves depends on the locus:

    H(2): W_{m^2}(2) only (zero for m <= 2);
    P3:   W^1_{m^2}(4) always, plus W^2_{(m/2)^2}(4) iff m = 2 mod 4;
    P4:   W_{(m/2)^2}(6) iff m is even;
    G:    components r with  r=1 always, r=2 iff nu_2(m)=1, r=3 iff nu_3(m)=1,
          r=6 iff both, each at discriminant (m/r)^2.

cd_count(locus, d) = sum_{m|d} sigma(d/m) |S_{m,m}| then counts all torus
covers of degree d (minimal or not), the quantity whose partial sums give the
Masur-Veech volume.

The genus-2 oracle counts pairs (h, v) of permutations of d letters with
<h, v> transitive and commutator h v h^-1 v^-1 a single 3-cycle, weighted by
1/d! -- i.e. square-tiled surfaces in H(2) counted with weight 1/|Aut|.  It
must agree exactly with cd_count(H2, d).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .arith import divisors, nu, sigma
from .euler import chi_G, chi_W2, chi_W4, chi_W6


class Locus(Enum):
    H2 = "h2"
    P3 = "p3"
    P4 = "p4"
    G = "gothic"

    @property
    def complex_dim(self) -> int:
        # dim H(2) = 2g + n - 1 = 4; the Prym and gothic loci are
        # four-dimensional affine invariant manifolds.  This exponent drives
        # the D^dim normalisation of the volume estimator.
        return 4


@dataclass(frozen=True)
class CoverCount:
    """|S_{m,m}| split by contributing curve: entries (family, D, component, count)."""

    m: int
    contributions: tuple[tuple[str, int, int | None, Fraction], ...]
    total: Fraction


def sts_count(chi: Fraction) -> Fraction:
    """Number of minimal torus covers of degree and area m on a curve: -6 chi."""
    if chi > 0:
        raise ValueError("Teichmueller curves have chi <= 0")
    return -6 * Fraction(chi)


def smm(locus: Locus, m: int, mode: str = "main_term") -> CoverCount:
    """|S_{m,m}(locus)| by the distribution rules, as curve contributions.

    ``mode`` selects the square-discriminant surrogate for the gothic locus
    (main_term / leading / remark); H(2) values are exact, P3/P4 use their
    main-term formulas.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    parts: list[tuple[str, int, int | None, Fraction]] = []
    if locus is Locus.H2:
        if m > 2:
            parts.append(("W2", m * m, None, sts_count(chi_W2(m * m))))
    elif locus is Locus.P3:
        parts.append(("W4", m * m, 1, sts_count(chi_W4(m * m, 1, "main_term").value)))
        if m % 4 == 2:
            h = m // 2
            parts.append(("W4", h * h, 2, sts_count(chi_W4(h * h, 2, "main_term").value)))
    elif locus is Locus.P4:
        if m % 2 == 0:
            h = m // 2
            parts.append(("W6", h * h, None, sts_count(chi_W6(h * h, "main_term").value)))
    elif locus is Locus.G:
        rs = [1]
        if nu(2, m) == 1:
            rs.append(2)
        if nu(3, m) == 1:
            rs.append(3)
        if nu(2, m) == 1 and nu(3, m) == 1:
            rs.append(6)
        for r in rs:
            h = m // r
            rmode = mode
            if mode == "remark" and (r != 1 or h == 2):
                # the remark correction is known for r = 1 only, and at d = 2
                # it exceeds the main term (the one chi > 0 artifact of the
                # conjectural formula); fall back to the sandwich lower bound
                rmode = "main_term"
            parts.append(("G", h * h, r, sts_count(chi_G(h * h, r, rmode).value)))
    total = sum((c for *_ignored, c in parts), Fraction(0))
    return CoverCount(m, tuple(parts), total)


def cd_count(locus: Locus, d: int, mode: str = "main_term") -> Fraction:
    """|C_d| = sum_{m|d} sigma(d/m) |S_{m,m}|: all torus covers of degree d."""
    if d < 1:
        raise ValueError("need d >= 1")
    return sum(
        (sigma(1, d // m) * smm(locus, m, mode).total for m in divisors(d)),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# Permutation-pair oracle for H(2)
# ---------------------------------------------------------------------------

def _partitions(n: int, largest: int | None = None):
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _perm_from_cycle_type(part: tuple[int, ...], d: int) -> tuple[int, ...]:
    p = list(range(d))
    pos = 0
    for length in part:
        for i in range(length):
            p[pos + i] = pos + (i + 1) % length
        pos += length
    return tuple(p)


def _centralizer_size(part: tuple[int, ...]) -> int:
    size = 1
    for length in set(part):
        mult = part.count(length)
        size *= length**mult * factorial(mult)
    return size


def _count_for_rep(args: tuple[int, tuple[int, ...], str]) -> tuple[int, int]:
    """(#v passing, centralizer size) for one conjugacy-class representative h."""
    d, part, convention = args
    h = _perm_from_cycle_type(part, d)
    hinv = [0] * d
    for i, hi in enumerate(h):
        hinv[hi] = i
    rng = range(d)
    flipped = convention == "vh"
    count = 0
    for v in itertools.permutations(rng):
        vinv = [0] * d
        for i, vi in enumerate(v):
            vinv[vi] = i
        if flipped:  # v h v^-1 h^-1 instead of h v h^-1 v^-1
            a, ainv, b, binv = v, vinv, h, hinv
        else:
            a, ainv, b, binv = h, hinv, v, vinv
        # commutator w = a b a^-1 b^-1, then require exactly one 3-cycle
        moved = 0
        for i in rng:
            if a[b[ainv[binv[i]]]] != i:
                moved += 1
                if moved > 3:
                    break
        if moved != 3:
            continue
        # transitivity of <h, v> on the d letters
        seen = 1
        stack = [0]
        visited = bytearray(d)
        visited[0] = 1
        while stack:
            i = stack.pop()
            for j in (h[i], v[i]):
                if not visited[j]:
                    visited[j] = 1
                    seen += 1
                    stack.append(j)
        if seen == d:
            count += 1
    return count, _centralizer_size(part)


def h2_permutation_oracle(
    d: int, threads: int = 1, commutator: str = "hv"
) -> Fraction:
    """Weighted count of degree-d square-tiled surfaces in H(2), from scratch.

    Counts pairs (h, v) in S_d x S_d with <h, v> transitive whose commutator
    h v h^-1 v^-1 has exactly one nontrivial cycle, of length 3, and divides
    by d! (h runs over conjugacy-class representatives weighted by class
    size, so the total is sum over classes of count / |centralizer|).

    ``commutator='vh'`` counts with the conjugate convention v h v^-1 h^-1
    instead; both conventions give identical counts.
    """
    if not 1 <= d <= 10:
        raise ValueError("oracle is cost-guarded to 1 <= d <= 10")
    if commutator not in ("hv", "vh"):
        raise ValueError("commutator must be 'hv' or 'vh'")
    jobs = [(d, part, commutator) for part in _partitions(d)]
    if threads > 1 and d >= 7:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            results = list(pool.map(_count_for_rep, jobs))
    else:
        results = [_count_for_rep(job) for job in jobs]
    total = Fraction(0)
    for count, centralizer in results:
        total += Fraction(count, centralizer)
    return total
