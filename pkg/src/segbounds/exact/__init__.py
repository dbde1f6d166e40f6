"""Exact arithmetic kernel: rationals, polynomials, Sturm counting, Chebyshev maps.

Everything in this subpackage is pure and exact.  Values are immutable after
construction and safe to share between threads or processes.
"""

from segbounds.exact.cheb import (
    cheb_from_cosines,
    circle_imag_part,
    circle_real_part,
)
from segbounds.exact.gaussian import GaussianRational
from segbounds.exact.poly import (
    Poly,
    Rational,
    falling_factorial,
    half_binomial,
    poly_gcd,
    square_free_part,
)
from segbounds.exact.sturm import (
    SturmChain,
    count_roots_with_multiplicity,
    isolate_real_roots,
    sign_at_isolated_root,
    sturm_count,
)

__all__ = [
    "GaussianRational",
    "Poly",
    "Rational",
    "SturmChain",
    "cheb_from_cosines",
    "circle_imag_part",
    "circle_real_part",
    "count_roots_with_multiplicity",
    "falling_factorial",
    "half_binomial",
    "isolate_real_roots",
    "poly_gcd",
    "sign_at_isolated_root",
    "square_free_part",
    "sturm_count",
]
