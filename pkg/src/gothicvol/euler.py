"""Euler characteristics of Hilbert modular surfaces, the reducible locus and
the Weierstrass / Prym / gothic Teichmueller curve families.

All values are orbifold Euler characteristics, exact rationals.  The core
formulas:

    chi(X_{d^2})        = a(d) / 72
    chi(X_D)            = e(D, 1) / 30                     (D not a square)
    chi(X_{d^2}(b_r))   = ratio * chi(X_{d^2}),  ratio in {1, 3/2, 4/3, 2}
                          by gcd(6, d) in {1, 2, 3, 6}
    chi(R_D^r)          = -e(D, 6) / (6 c_D)
    chi(W_D(2))         = -(9/2) chi(X_D)                  (D > 4 non-square)
    chi(W_{d^2}(2))     = -d^2 (d-2)/16 * sum_{r|d} mu(r)/r^2
    chi(W_D^j(4))       = -(5/2) chi(X_D) if f odd, -(15/4) chi(X_D) if f even
    chi(W_D(6))         = -7 chi(X_D)
    chi(G_D^j)          = -(3/2, 9/4, 2, 3 by gcd(6,f)) chi(X_D) - 2 chi(R^j)

For square discriminants the curve formulas (other than genus 2) are not
unconditional: the Baily-Borel boundary contributes an unknown correction of
relative size O(1/d).  Those values are therefore typed by a ``mode``:

    exact      -- unconditional formula (non-square D; genus 2 squares)
    main_term  -- the boundary-free lower bound of the square-discriminant
                  sandwich, adopted as surrogate (default in volume sums)
    leading    -- the pure a(d) leading term with the kappa' constants
                  {13/720, 13/480, 13/540, 13/360} by gcd(6, d)
    remark     -- main_term plus the simulation-backed (2,6,3,9)/d correction
                  (gothic component r = 1 only; never used by default)

The d = 1 degenerate discriminant is allowed in surrogate modes through the
value chain chi(X_1) = 1/72, e(1, k) = -1/12, so that the closed S_k forms of
the volume estimators match the direct sums term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, moebius, sigma, sl2_order
from .ideals import component_list
from .prototypes import conductor_decompose, e_value
from .qforms import e_square_table, ek_coeff

MODES = ("exact", "main_term", "leading", "remark")

# chi(X_{d^2}(b_r)) / chi(X_{d^2}) by gcd(6, d); also the gothic coefficient
# -chi coefficient table is 3/2 times this.
X_BR_RATIO = {1: Fraction(1), 2: Fraction(3, 2), 3: Fraction(4, 3), 6: Fraction(2)}

# -chi(G_{d^2}^r) ~ KAPPA_PRIME[gcd(6,d)] * a(d)
KAPPA_PRIME = {
    1: Fraction(13, 720),
    2: Fraction(13, 480),
    3: Fraction(13, 540),
    6: Fraction(13, 360),
}

# Remark correction coefficients (r = 1), by gcd(6, d)
REMARK_COEFF = {1: 2, 2: 6, 3: 3, 6: 9}

# Gothic non-emptiness residues and component counts for non-square D
GOTHIC_RESIDUES = {0, 1, 4, 9, 12, 16}
_C_D_NONSQUARE = {0: 1, 12: 1, 4: 2, 9: 2, 16: 2, 1: 4}


@dataclass(frozen=True)
class EulerCharRecord:
    family: str  # one of X, X_br, W2, W4, W6, R, G
    D: int
    component: int | None
    mode: str
    value: Fraction
    empty: bool = False


def _is_square(D: int) -> int | None:
    r = math.isqrt(D)
    return r if r * r == D else None


def _validate_discriminant(D: int) -> None:
    if D < 1 or D % 4 in (2, 3):
        raise ValueError(f"{D} is not a discriminant")


def _conductor(D: int) -> int:
    return conductor_decompose(D).f


# ---------------------------------------------------------------------------
# Hilbert modular surfaces
# ---------------------------------------------------------------------------

def chi_X_square(d: int) -> Fraction:
    """chi(X_{d^2}) = a(d)/72; d = 1 gives the non-standard value 1/72."""
    if d < 1:
        raise ValueError("need d >= 1")
    return Fraction(sl2_order(d), 72)


_E_CACHE: dict[int, list[Fraction]] = {}


def precompute_e_square(k: int, dmax: int) -> None:
    """Warm the exact e(d^2, k) cache in bulk (the volume harness hot path)."""
    cached = _E_CACHE.get(k)
    if cached is None or len(cached) <= dmax:
        _E_CACHE[k] = e_square_table(k, dmax)


def e_square(d: int, k: int) -> Fraction:
    """Exact e(d^2, k), via the q-expansion route with Moebius inversion."""
    cached = _E_CACHE.get(k)
    if cached is not None and d < len(cached):
        return cached[d]
    return sum(
        (moebius(d // m) * ek_coeff(k, m * m) for m in divisors(d)), Fraction(0)
    )


def chi_X_nonsquare(D: int) -> Fraction:
    """chi(X_D) = e(D, 1)/30 for a non-square discriminant D > 4."""
    _validate_discriminant(D)
    if _is_square(D) is not None:
        raise ValueError(f"D = {D} is a square; use chi_X_square")
    if D <= 4:
        raise ValueError("need D > 4")
    return e_value(D, 1) / 30


def chi_X(D: int) -> Fraction:
    """chi(X_D), dispatching on squareness."""
    d = _is_square(D)
    return chi_X_square(d) if d is not None else chi_X_nonsquare(D)


def chi_X_br(d: int, r: int) -> Fraction:
    """chi(X_{d^2}(b_r)): the (1,6)-polarised surface, independent of r.

    r must name a component (r in component_list(d)); d = 1 accepts any r | 6.
    """
    valid = [1, 2, 3, 6] if d == 1 else component_list(d)
    if r not in valid:
        raise ValueError(f"r = {r} does not name a component for d = {d}")
    return X_BR_RATIO[math.gcd(6, d)] * chi_X_square(d)


# ---------------------------------------------------------------------------
# Reducible locus
# ---------------------------------------------------------------------------

def c_D(D: int) -> int:
    """Number of ideals of norm 6: sigma_0(6/(d,6)) for squares; the residue
    table of the gothic theorem for non-squares (errors outside it)."""
    d = _is_square(D)
    if d is not None:
        return sigma(0, 6 // math.gcd(d, 6))
    m = D % 24
    if m not in _C_D_NONSQUARE:
        raise ValueError(f"c_D undefined: D = {D} is outside the gothic residue table")
    return _C_D_NONSQUARE[m]


def chi_R(D: int, mode: str = "exact") -> Fraction:
    """chi(R_D^r) = -e(D, 6) / (6 c_D); square D is a main-term surrogate."""
    _validate_discriminant(D)
    d = _is_square(D)
    if d is not None:
        if mode != "main_term":
            raise ValueError("square discriminants require mode='main_term'")
        return -e_square(d, 6) / (6 * c_D(D))
    if mode != "exact":
        raise ValueError("non-square discriminants use mode='exact'")
    return -e_value(D, 6) / (6 * c_D(D))


# ---------------------------------------------------------------------------
# Teichmueller curve families
# ---------------------------------------------------------------------------

def chi_W2(D: int) -> Fraction:
    """chi(W_D(2)); exact in both the square and non-square branch."""
    _validate_discriminant(D)
    d = _is_square(D)
    if d is not None:
        if d < 2:
            raise ValueError("W_1(2) is undefined")
        return Fraction(-d * d * (d - 2), 16) * sum(
            Fraction(moebius(r), r * r) for r in divisors(d)
        )
    if D <= 4:
        raise ValueError("need D > 4")
    return Fraction(-9, 2) * chi_X_nonsquare(D)


def chi_W4(D: int, j: int = 1, mode: str = "exact") -> EulerCharRecord:
    """chi(W_D^j(4)): empty if D = 5 mod 8, one component if D = 0,4 mod 8,
    two if D = 1 mod 8; -(5/2) chi(X_D) when the conductor is odd, -(15/4)
    when it is even.  Square discriminants require mode='main_term'."""
    _validate_discriminant(D)
    if D % 8 == 5:
        return EulerCharRecord("W4", D, None, mode, Fraction(0), empty=True)
    if j == 2 and D % 8 != 1:
        raise ValueError(f"W_D(4) has a single component for D = {D}")
    if j not in (1, 2):
        raise ValueError("component j must be 1 or 2")
    d = _is_square(D)
    if d is not None:
        if mode != "main_term":
            raise ValueError("square discriminants require mode='main_term'")
        factor = Fraction(-5, 2) if d % 2 else Fraction(-15, 4)
        return EulerCharRecord("W4", D, j, mode, factor * chi_X_square(d))
    if mode != "exact":
        raise ValueError("non-square discriminants use mode='exact'")
    f = _conductor(D)
    factor = Fraction(-5, 2) if f % 2 else Fraction(-15, 4)
    return EulerCharRecord("W4", D, j, mode, factor * chi_X_nonsquare(D))


def chi_W6(D: int, mode: str = "exact") -> EulerCharRecord:
    """chi(W_D(6)) = -7 chi(X_D); irreducible.  Squares are main-term."""
    _validate_discriminant(D)
    d = _is_square(D)
    if d is not None:
        if mode != "main_term":
            raise ValueError("square discriminants require mode='main_term'")
        return EulerCharRecord("W6", D, None, mode, -7 * chi_X_square(d))
    if mode != "exact":
        raise ValueError("non-square discriminants use mode='exact'")
    return EulerCharRecord("W6", D, None, mode, -7 * chi_X_nonsquare(D))


def chi_G(D: int, r: int = 1, mode: str = "exact") -> EulerCharRecord:
    """chi(G_D^r) per the four-case formula; square discriminants offer the
    main_term / leading / remark surrogates (remark: r = 1 only)."""
    _validate_discriminant(D)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    d = _is_square(D)
    if d is None:
        if mode != "exact":
            raise ValueError("non-square discriminants use mode='exact'")
        if D % 24 not in GOTHIC_RESIDUES:
            return EulerCharRecord("G", D, None, mode, Fraction(0), empty=True)
        if not 1 <= r <= c_D(D):
            raise ValueError(f"component index {r} out of range for D = {D}")
        f = _conductor(D)
        coeff = Fraction(3, 2) * X_BR_RATIO[math.gcd(6, f)]
        value = -coeff * chi_X_nonsquare(D) - 2 * chi_R(D)
        return EulerCharRecord("G", D, r, mode, value)
    # squares: all residues d^2 mod 24 lie in the non-emptiness set
    if mode == "exact":
        raise ValueError(
            "square discriminants have no unconditional formula; "
            "pick mode in {'main_term', 'leading', 'remark'}"
        )
    valid = [1, 2, 3, 6] if d == 1 else component_list(d)
    if r not in valid:
        raise ValueError(f"r = {r} does not name a component for d = {d}")
    g6 = math.gcd(6, d)
    if mode == "leading":
        return EulerCharRecord("G", D, r, mode, -KAPPA_PRIME[g6] * sl2_order(d))
    value = Fraction(-3, 2) * chi_X_br(d, r) - 2 * chi_R(D, "main_term")
    if mode == "remark":
        if r != 1:
            raise ValueError("the remark formula is stated for r = 1 only")
        value += Fraction(REMARK_COEFF[g6], d) * chi_X_br(d, 1)
    return EulerCharRecord("G", D, r, mode, value)


def chi_boundary_gap(d: int, r: int, eps: Fraction = Fraction(9)) -> Fraction:
    """Width (eps/d) chi(X_{d^2}(b_r)) of the square-discriminant sandwich.

    The default eps = 9 is the largest remark coefficient, so the remark
    values sit inside the sandwich by construction while main_term values
    still face a real assertion.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    return Fraction(eps) / d * chi_X_br(d, r)
