"""Exact-arithmetic toolkit for power-series segment bounds.

Computes Taylor coefficients of sqrt(1 + z + ... + z^d) families, certifies
zero-freeness of their sections in the closed unit disk, evaluates sharp
segment bounds for functions bounded by 1 on the disk, and runs an exact
verification harness for the associated extremal (Blaschke-product) problems.
All core results are exact rationals; floating point appears only in
cross-checks, scalable scans and report rendering.
"""

__version__ = "0.1.0"

from segbounds.exact import (
    GaussianRational,
    Poly,
    Rational,
    cheb_from_cosines,
    falling_factorial,
    half_binomial,
    isolate_real_roots,
    poly_gcd,
    sturm_count,
)

__all__ = [
    "GaussianRational",
    "Poly",
    "Rational",
    "__version__",
    "cheb_from_cosines",
    "falling_factorial",
    "half_binomial",
    "isolate_real_roots",
    "poly_gcd",
    "sturm_count",
]
