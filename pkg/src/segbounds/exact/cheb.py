"""Exact Chebyshev-basis conversions between circle and interval problems.

cos(kt) = T_k(cos t) and sin(kt) = sin t * U_{k-1}(cos t) turn questions about
trigonometric polynomials on the circle into questions about ordinary
polynomials on [-1, 1], where Sturm counting applies.  All conversions here
use the integer Chebyshev coefficient recurrences, so results are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from segbounds.exact.poly import Poly


def _basis_accumulate(weights: Sequence[Fraction], second_kind: bool) -> Poly:
    """Sum w_k * B_k(x) where B is the T (first) or U (second) Chebyshev basis."""
    if not weights:
        return Poly()
    out: List[Fraction] = [Fraction(0)] * len(weights)
    prev: List[int] = [1]
    cur: List[int] = [0, 2] if second_kind else [0, 1]
    for k, w in enumerate(weights):
        if k == 0:
            basis = prev
        elif k == 1:
            basis = cur
        else:
            nxt = [0] + [2 * c for c in cur]
            for i, c in enumerate(prev):
                nxt[i] -= c
            prev, cur = cur, nxt
            basis = cur
        if w:
            for i, c in enumerate(basis):
                out[i] += w * c
    return Poly(out)


def cheb_from_cosines(cos_coeffs: Sequence) -> Poly:
    """Polynomial Q with Q(cos t) = sum_k cos_coeffs[k] * cos(kt), exactly."""
    weights = [Fraction(c) for c in cos_coeffs]
    return _basis_accumulate(weights, second_kind=False)


def circle_real_part(p: Poly) -> Poly:
    """R with Re p(e^{it}) = R(cos t), for real-coefficient p."""
    return cheb_from_cosines(p.coeffs)


def circle_imag_part(p: Poly) -> Poly:
    """S with Im p(e^{it}) = sin t * S(cos t), for real-coefficient p.

    S is the zero polynomial exactly when p is constant.
    """
    weights = [Fraction(c) for c in p.coeffs[1:]]
    return _basis_accumulate(weights, second_kind=True)
