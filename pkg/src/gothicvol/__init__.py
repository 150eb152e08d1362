"""gothicvol: exact Euler characteristics of arithmetic Teichmueller curves
and lattice-point confirmation of Masur-Veech volumes.

Modules:
    arith      -- exact rationals, pi-multiples, multiplicative functions,
                  sieves, Hermite sublattice enumeration
    prototypes -- prototype sets P_k(D) and the counts e(D, k)
    qforms     -- q-expansions of theta, G2, F_k and the coefficient oracle
    zagier     -- Gauss sums, Euler factors, exact ebar_1 / ebar_6
    ideals     -- the order O_{d^2}, norm-n ideals, trace pairing, polarisation
    euler      -- every Euler-characteristic formula, with surrogate modes
    counting   -- square-tiled counts |S_{m,m}|, |C_d| and the H(2) oracle
    volume     -- S_k sums, direct/closed volume estimators, exact targets
    verify     -- the consolidated cross-oracle invariant suite
    cli        -- machine-readable command line front end
"""

from .arith import ExactRational, PiQuantity

__all__ = ["ExactRational", "PiQuantity"]
__version__ = "0.1.0"
