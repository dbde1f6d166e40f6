"""Certified zero-freeness of real polynomials on the closed unit disk.

Two routes are provided.  The exact route converts circle questions to
interval questions through Chebyshev decompositions (Re p(e^{it}) = R(cos t),
Im p(e^{it}) = sin t * S(cos t), |p(e^{it})|^2 = A(cos t)), counts boundary
zeros by Sturm on A, and computes the winding number of t -> p(e^{it}) by
locating every zero of the imaginary part on the circle and summing signed
crossings of the positive real axis; by the argument principle the winding
equals the number of zeros inside.  It is decision-complete over the
rationals, with no tolerance knobs.

The float route samples |p| on a uniform circle grid and is conclusive only
when the minimum sample clears a Lipschitz margin L*h plus an upward-rounded
evaluation error bound; otherwise it reports itself inconclusive.  It scales
to degrees far beyond the exact route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from segbounds.exact.cheb import (
    cheb_from_cosines,
    circle_imag_part,
    circle_real_part,
)
from segbounds.exact.poly import Poly
from segbounds.exact.sturm import (
    IsolatedRoot,
    SturmChain,
    isolate_real_roots,
    nudge_interval_inward,
    sign_at_isolated_root,
    sturm_count,
)

EXACT_METHOD = "exact-sturm"
FLOAT_METHOD = "float-lipschitz"


@dataclass(frozen=True)
class ZeroFreeCertificate:
    """Machine-checkable evidence about zeros of a polynomial in the closed disk.

    The certificate asserts zero-freeness exactly when the boundary zero count
    and the winding number are both zero.  Float-method certificates may be
    inconclusive, in which case both fields are None.
    """

    poly_id: str
    method: str
    boundary_zero_count: Optional[int]
    winding_number: Optional[int]
    grid_points: int = 0
    min_modulus_lower_bound: Optional[float] = None

    @property
    def conclusive(self) -> bool:
        if self.boundary_zero_count is None:
            return False
        return self.boundary_zero_count > 0 or self.winding_number is not None

    @property
    def zero_free(self) -> bool:
        return self.boundary_zero_count == 0 and self.winding_number == 0


def circle_modulus_poly(p: Poly) -> Poly:
    """A with A(cos t) = |p(e^{it})|^2, from the coefficient autocorrelation.

    |p|^2 on the circle expands as sum_{j,k} p_j p_k cos((j-k)t); collecting
    equal frequency gaps gives cosine coefficients e_0 = sum p_k^2 and
    e_m = 2 sum_k p_k p_{k+m}, converted exactly to the Chebyshev basis.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no modulus polynomial")
    cs = [Fraction(c) for c in p.coeffs]
    deg = len(cs) - 1
    cos_coeffs: List[Fraction] = []
    for m in range(deg + 1):
        acc = sum((cs[k] * cs[k + m] for k in range(deg + 1 - m)), Fraction(0))
        cos_coeffs.append(acc if m == 0 else 2 * acc)
    return cheb_from_cosines(cos_coeffs)


def boundary_zero_count(p: Poly) -> int:
    """Number of distinct zeros of p on the unit circle, exactly.

    Each root x0 of A in the open interval (-1, 1) corresponds to the
    conjugate pair e^{+-it0} with cos t0 = x0 (two distinct zeros, since the
    coefficients are real); x0 = +-1 correspond to z = +-1.  Interior roots
    are cross-checked against the real/imaginary parts, which must both
    vanish there.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    at_one = int(p(Fraction(1)) == 0)
    at_minus_one = int(p(Fraction(-1)) == 0)
    a = circle_modulus_poly(p)
    if a.degree < 1:
        return at_one + at_minus_one
    interior = sturm_count(a, Fraction(-1), Fraction(1), closed=False)
    if interior:
        r_part = circle_real_part(p)
        s_part = circle_imag_part(p)
        for region in isolate_real_roots(a, Fraction(-1), Fraction(1)):
            for q in (r_part, s_part):
                if q.is_zero:
                    continue
                if (
                    q(region.lo) != 0
                    and q(region.hi) != 0
                    and sturm_count(q, region.lo, region.hi, closed=True) == 0
                ):
                    raise AssertionError(
                        "modulus root not matched by real/imaginary parts"
                    )
    return 2 * interior + at_one + at_minus_one


def _deflate_at(p: Poly, points: Sequence[Fraction]) -> Poly:
    for r in points:
        while not p.is_zero and p(r) == 0:
            p = p // Poly.x_minus(r)
    return p


def _winding_assuming_no_boundary_zeros(p: Poly) -> int:
    r_part = circle_real_part(p)
    s_part = circle_imag_part(p)
    if s_part.is_zero:
        # curve stays on the real axis and never hits 0
        return 0
    s_red = _deflate_at(s_part, [Fraction(1), Fraction(-1)])
    regions: Tuple[IsolatedRoot, ...] = ()
    chain: Optional[SturmChain] = None
    if s_red.degree >= 1:
        regions = isolate_real_roots(s_red, Fraction(-1), Fraction(1))
        if regions:
            chain = SturmChain(s_red)

    # Signs of Im on the upper semicircle between consecutive zeros of S,
    # listed in ascending x: gaps (-1, x_1), (x_1, x_2), ..., (x_k, 1).
    k = len(regions)
    samples: List[Fraction] = []
    if k == 0:
        samples.append(Fraction(0))
    else:
        regions = list(regions)
        regions[0] = nudge_interval_inward(chain, regions[0], lo_min=Fraction(-1))
        regions[-1] = nudge_interval_inward(chain, regions[-1], hi_max=Fraction(1))
        samples.append(regions[0].lo)
        for i in range(k - 1):
            samples.append(regions[i].hi)
        samples.append(regions[-1].hi)
    gap_signs = [_sgn(s_part(x)) for x in samples]
    if any(s == 0 for s in gap_signs):
        raise AssertionError("gap sample landed on a root")

    winding = 0
    if r_part(Fraction(1)) > 0:
        winding += gap_signs[-1]
    if r_part(Fraction(-1)) > 0:
        winding -= gap_signs[0]
    for j, region in enumerate(regions, start=1):
        if sign_at_isolated_root(r_part, chain, region) > 0:
            winding += gap_signs[j - 1] - gap_signs[j]
    return winding


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def winding_number(p: Poly) -> int:
    """Winding of t -> p(e^{it}) around 0; equals the zero count in |z| < 1."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if boundary_zero_count(p) != 0:
        raise ValueError("winding undefined on zero")
    return _winding_assuming_no_boundary_zeros(p)


def certify_zero_free(p: Poly, poly_id: str = "") -> ZeroFreeCertificate:
    """Exact certificate: boundary zero count plus winding number."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    ident = poly_id or f"poly(degree={p.degree})"
    count = boundary_zero_count(p)
    if count:
        return ZeroFreeCertificate(ident, EXACT_METHOD, count, None)
    w = _winding_assuming_no_boundary_zeros(p)
    return ZeroFreeCertificate(ident, EXACT_METHOD, 0, w)


def float_zero_scan(p: Poly, grid: int, poly_id: str = "") -> ZeroFreeCertificate:
    """Lipschitz-margin scan of |p| on a uniform circle grid.

    Conclusive only when the minimum sampled modulus exceeds the worst drift
    between samples (L*h/2 for zero-exclusion, L*h for a trustworthy sampled
    winding) plus an upward-rounded evaluation error; otherwise the
    certificate is inconclusive rather than wrong.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    deg = p.degree
    if grid < 8 * max(deg, 1):
        raise ValueError("grid must be at least 8 * degree")
    ident = poly_id or f"poly(degree={p.degree})"

    coeffs = np.array([float(c) for c in p.coeffs], dtype=np.float64)
    abs_sum = float(np.sum(np.abs(coeffs)))
    lipschitz = float(sum(k * abs(float(c)) for k, c in enumerate(p.coeffs)))
    lipschitz *= 1.0 + 1e-12
    eval_err = 4.0 * (deg + 2) * np.finfo(np.float64).eps * abs_sum

    theta = 2.0 * np.pi * np.arange(grid) / grid
    z = np.exp(1j * theta)
    vals = np.polynomial.polynomial.polyval(z, coeffs)
    moduli = np.abs(vals)
    m = float(moduli.min())
    h = 2.0 * np.pi / grid

    margin_zero = m - eval_err - lipschitz * h / 2.0
    margin_wind = m - eval_err - lipschitz * h
    if margin_zero <= 0.0:
        return ZeroFreeCertificate(ident, FLOAT_METHOD, None, None, grid, None)

    if margin_wind <= 0.0:
        # circle is provably zero-free but the sampled winding is not trusted
        return ZeroFreeCertificate(ident, FLOAT_METHOD, 0, None, grid, margin_zero)

    args = np.angle(vals)
    steps = np.diff(np.concatenate([args, args[:1]]))
    steps = (steps + np.pi) % (2.0 * np.pi) - np.pi
    if float(np.max(np.abs(steps))) > np.pi / 2.0 + 0.2:
        return ZeroFreeCertificate(ident, FLOAT_METHOD, 0, None, grid, margin_zero)
    total = float(steps.sum()) / (2.0 * np.pi)
    w = round(total)
    if abs(total - w) > 1e-6:
        return ZeroFreeCertificate(ident, FLOAT_METHOD, 0, None, grid, margin_zero)
    return ZeroFreeCertificate(ident, FLOAT_METHOD, 0, int(w), grid, margin_zero)


def _scan_job(args) -> ZeroFreeCertificate:
    d, n, method, grid = args
    from segbounds.coefficients import sqrt_section

    section = sqrt_section(d, n)
    ident = f"section(d={d},n={n})"
    if method == EXACT_METHOD:
        return certify_zero_free(section, poly_id=ident)
    return float_zero_scan(section, grid, poly_id=ident)


def scan_zero_free(
    d_values: Sequence[int],
    n_values: Sequence[int],
    method: str = EXACT_METHOD,
    grid: int = 1 << 17,
) -> Tuple[ZeroFreeCertificate, ...]:
    """Certificates for the square-root sections over a (d, n) grid.

    Evidence only: for d > 2 zero-freeness is an open question, so the scan
    reports certificates (and any counterexample witness) without asserting
    the claim.  Deterministic (d, n) ordering; parallel across points.
    """
    if method not in (EXACT_METHOD, FLOAT_METHOD):
        raise ValueError(f"unknown method: {method}")
    from segbounds.runtime import parallel_map

    jobs = [(d, n, method, grid) for d in d_values for n in n_values]
    return tuple(parallel_map(_scan_job, jobs))
