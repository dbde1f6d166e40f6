"""Coefficients of section(z) * sqrt(1 - z) and their sign certificates.

Multiplying the degree-n Taylor section of sqrt(1 + z + z^2) by sqrt(1 - z)
produces a series whose coefficients are nonpositive after the constant term
and strictly negative past index n.  This module computes those coefficients
exactly, builds the degree-n polynomial governing their sign pattern through
the coefficient-ratio identity

    gamma_k * (k - 3/2)^(falling n) = P(k) * c_k,

and verifies the ratio identity, the sign claims, and the localization of the
roots of P in [1, n+1) by exact Sturm counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import List, Optional, Tuple

from segbounds.coefficients import (
    sqrt_coeffs_recurrence,
    sqrt_one_minus_z_coeffs,
    taylor_at_one,
)
from segbounds.exact.poly import Poly, falling_factorial
from segbounds.exact.sturm import SturmChain, count_roots_with_multiplicity

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int


@dataclass(frozen=True)
class ProductTable:
    """Coefficients gamma_0..gamma_M of section_n(z) * sqrt(1 - z), d = 2."""

    n: int
    M: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


def product_coeffs(n: int, M: int) -> ProductTable:
    """Exact convolution of the degree-n section coefficients with sqrt(1 - z)."""
    if M < n + 1:
        raise ValueError("need M >= n + 1")
    b = sqrt_coeffs_recurrence(2, n).values
    c = sqrt_one_minus_z_coeffs(M).values
    out: List[Fraction] = []
    for k in range(M + 1):
        acc = Fraction(0)
        for s in range(min(k, n) + 1):
            acc += b[s] * c[k - s]
        out.append(acc)
    return ProductTable(n, M, tuple(out))


@dataclass(frozen=True)
class ProductSignVerdict:
    n: int
    M: int
    nonpositive_ok: bool
    strictly_negative_ok: bool
    small_index_ok: bool
    tail_identity_ok: bool
    first_violation: Optional[int] = None

    @property
    def ok(self) -> bool:
        return (
            self.nonpositive_ok
            and self.strictly_negative_ok
            and self.small_index_ok
            and self.tail_identity_ok
        )


def _check_signs(table: ProductTable) -> ProductSignVerdict:
    n, M, g = table.n, table.M, table.values
    b = sqrt_coeffs_recurrence(2, n + 1).values
    c = sqrt_one_minus_z_coeffs(max(M // 3 + 1, 1)).values
    nonpos, strict, small, first = True, True, True, None
    if g[0] != 1:
        return ProductSignVerdict(n, M, False, False, False, False, 0)

    for k in range(1, M + 1):
        if not g[k] <= 0:
            nonpos = False
            first = k if first is None else first
        if k > n and not g[k] < 0:
            strict = False
            first = k if first is None else first
    for k in range(1, n + 1):
        want = c[k // 3] if k % 3 == 0 else Fraction(0)
        if g[k] != want:
            small = False
            first = k if first is None else first
    # index n+1: gamma_(n+1) = [3 | n+1] c_((n+1)/3) - b_(n+1); for 3 | n this
    # is exactly -b_(n+1) < 0.
    expect = (c[(n + 1) // 3] if (n + 1) % 3 == 0 else Fraction(0)) - b[n + 1]
    tail_ok = g[n + 1] == expect
    if not tail_ok and first is None:
        first = n + 1
    return ProductSignVerdict(n, M, nonpos, strict, small, tail_ok, first)


def check_product_signs(n: int, M: int) -> ProductSignVerdict:
    """Verify the sign claims for a single section degree n at truncation M."""
    return _check_signs(product_coeffs(n, M))


def scan_product_signs(n_max: int, margin: int = 16) -> Tuple[ProductSignVerdict, ...]:
    """Verdicts for every n <= n_max with M = 3n + margin.

    Builds the convolution incrementally across n (adding one section term per
    step), so the whole sweep costs the same as the largest single table.
    """
    if margin < 1:
        raise ValueError("margin must be >= 1")
    m_max = 3 * n_max + margin
    b = sqrt_coeffs_recurrence(2, n_max).values
    c = sqrt_one_minus_z_coeffs(m_max).values
    gamma = list(c)
    verdicts = []
    for n in range(n_max + 1):
        if n > 0:
            bn = b[n]
            for k in range(n, m_max + 1):
                gamma[k] += bn * c[k - n]
        m_n = 3 * n + margin
        verdicts.append(
            _check_signs(ProductTable(n, m_n, tuple(gamma[: m_n + 1])))
        )
    return tuple(verdicts)


def product_sum_check(n: int, M: int) -> Tuple[Fraction, Fraction]:
    """Partial sum of the product coefficients and an exact tail bound.

    The full series sums to 0 at z = 1, and every coefficient past index M >= n+1
    is negative, so the partial sum equals the absolute tail and satisfies

        0 < sum_{k<=M} gamma_k <= (sum_s |b_s|) * (sum_{j<=M-n} c_j),

    using that sum_{j<=J} c_j equals the absolute tail of the sqrt(1-z) series.
    Returns (partial_sum, tail_bound).
    """
    table = product_coeffs(n, M)
    partial = sum(table.values, Fraction(0))
    b = sqrt_coeffs_recurrence(2, n).values
    c = sqrt_one_minus_z_coeffs(M).values
    abs_b = sum((abs(x) for x in b), Fraction(0))
    c_partial = sum(c[: M - n + 1], Fraction(0))
    return partial, abs_b * c_partial


@dataclass(frozen=True)
class QuotientPoly:
    """Degree-n polynomial from the coefficient-ratio identity; its leading
    coefficient equals the section value at 1."""

    n: int
    poly: Poly


def _mul_linear(p: List, c0: int) -> List:
    """p(y) * (y + c0) over integers."""
    out = [c * c0 for c in p] + [p[-1] * 0]
    for i, c in enumerate(p):
        out[i + 1] += c
    return out


def quotient_poly(n: int) -> QuotientPoly:
    """Build P(x) = sum_s b_s x^(falling s) (x - s - 3/2)^(falling n-s).

    Evaluated in the variable y = 2x all factors have integer coefficients:
    x^(falling s) = 2^(-s) * prod_{i<s} (y - 2i) and the shifted factor is
    2^(-(n-s)) * prod_{r=s}^{n-1} (y - (2r + 3)).  The sum is accumulated over
    integers and converted back to rational coefficients in x at the end.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    b = sqrt_coeffs_recurrence(2, n).values
    den = reduce(lcm, (v.denominator for v in b), 1)
    ib = [_mpz(v.numerator * (den // v.denominator)) for v in b]

    prefixes = [[_mpz(1)]]
    for s in range(n):
        prefixes.append(_mul_linear(prefixes[-1], -2 * s))
    suffixes: List[Optional[List]] = [None] * (n + 1)
    suffixes[n] = [_mpz(1)]
    for s in range(n - 1, -1, -1):
        suffixes[s] = _mul_linear(suffixes[s + 1], -(2 * s + 3))

    acc = [_mpz(0)] * (n + 1)
    for s in range(n + 1):
        if not ib[s]:
            continue
        pre, suf = prefixes[s], suffixes[s]
        term = [_mpz(0)] * (len(pre) + len(suf) - 1)
        for i, ci in enumerate(pre):
            if ci:
                for j, cj in enumerate(suf):
                    term[i + j] += ci * cj
        w = ib[s]
        for j, cj in enumerate(term):
            acc[j] += w * cj

    scale = (1 << n) * den
    coeffs = [Fraction(int(acc[j]) << j, scale) for j in range(n + 1)]
    return QuotientPoly(n, Poly(coeffs))


@dataclass(frozen=True)
class RatioIdentityVerdict:
    n: int
    K: int
    ok: bool
    first_violation: Optional[int] = None


def check_coeff_ratio_identity(n: int, K: int) -> RatioIdentityVerdict:
    """Cross-multiplied ratio identity gamma_k * (k-3/2)^(falling n) = P(k) * c_k
    for k = 0..K; no division, so sign changes of the falling factorial are
    harmless."""
    if K < n:
        raise ValueError("need K >= n")
    table = product_coeffs(n, max(K, n + 1))
    c = sqrt_one_minus_z_coeffs(K).values
    p = quotient_poly(n).poly
    # falling factorial at half-integers, advanced incrementally in k
    ff = falling_factorial(Fraction(-3, 2), n)
    for k in range(K + 1):
        if k > 0:
            x_new = Fraction(2 * k - 3, 2)  # new leading factor k - 3/2
            ff = ff * x_new / (x_new - n)
        if table[k] * ff != p(Fraction(k)) * c[k]:
            return RatioIdentityVerdict(n, K, False, k)
    return RatioIdentityVerdict(n, K, True)


@dataclass(frozen=True)
class RootLocalizationVerdict:
    n: int
    count_with_multiplicity: int
    integer_roots_ok: bool
    integer_roots_simple: bool
    sign_pattern_ok: bool
    positive_beyond_ok: bool
    gcd_degree: int

    @property
    def ok(self) -> bool:
        return (
            self.count_with_multiplicity == self.n
            and self.integer_roots_ok
            and self.sign_pattern_ok
            and self.positive_beyond_ok
        )


def check_root_localization(n: int) -> RootLocalizationVerdict:
    """Certify that P has exactly n roots (with multiplicity) in [1, n+1).

    Also checks the integer vanishing pattern (P(k) = 0 for 1 <= k <= n with
    3 not dividing k, with simplicity evidence from P'), the alternating signs
    at multiples of 3, and positivity at k = n+1, ..., n+10.  The gcd degree
    is reported as multiplicity evidence rather than assuming all roots are
    simple.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = quotient_poly(n).poly
    dp = p.derivative()

    total = count_roots_with_multiplicity(p, Fraction(1), Fraction(n + 1), closed=True)
    # interval is half-open at n+1: strip any endpoint multiplicity (none expected)
    at_end = Fraction(n + 1)
    q = p
    while q(at_end) == 0:
        total -= 1
        q = q // Poly.x_minus(at_end)

    int_roots_ok = True
    int_roots_simple = True
    for k in range(1, n + 1):
        if k % 3 != 0:
            if p(Fraction(k)) != 0:
                int_roots_ok = False
            if dp(Fraction(k)) == 0:
                int_roots_simple = False

    sign_ok = True
    for k in range(3, n + 1, 3):
        val = p(Fraction(k))
        if (n - k + 1) % 2 == 0:
            good = val > 0
        else:
            good = -val > 0
        if not good:
            sign_ok = False

    beyond_ok = all(p(Fraction(k)) > 0 for k in range(n + 1, n + 11))
    gcd_degree = SturmChain(p).gcd_poly().degree

    return RootLocalizationVerdict(
        n, total, int_roots_ok, int_roots_simple, sign_ok, beyond_ok, gcd_degree
    )
