"""Extremal rational functions and the exact inequality harness.

The sharp three-term bound is attained by the finite Blaschke-type function
z^n * section(1/z) / section(z); this module expands such rational functions
into exact Taylor coefficients, constructs the square-root coefficient
sequence attached to a target coefficient pattern, and checks the classical
coefficient inequality

    |mu_n a_0 + mu_{n-1} a_1 + ... + mu_0 a_n|  <=  |lambda_0|^2 + ... + |lambda_n|^2

on exact Gaussian-rational test functions.  Comparisons are made on squared
moduli so no square roots are ever taken.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from segbounds.coefficients import sqrt_section
from segbounds.disk_zeros import certify_zero_free
from segbounds.exact.gaussian import GaussianRational
from segbounds.exact.poly import Poly

Coeff = Union[int, Fraction, GaussianRational]


def _as_gaussian(value: Coeff) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(Fraction(value))


def _gaussian_poly(coeffs: Sequence[Coeff]) -> Poly:
    return Poly([_as_gaussian(c) for c in coeffs])


@dataclass(frozen=True)
class RationalFunctionSpec:
    """numerator / denominator with exact Gaussian-rational coefficients."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if self.denominator.is_zero or not self.denominator.coeffs[0]:
            raise ValueError("not expandable at origin")

    def __call__(self, z: complex) -> complex:
        num = complex(0)
        for c in reversed(self.numerator.coeffs):
            num = num * z + complex(c)
        den = complex(0)
        for c in reversed(self.denominator.coeffs):
            den = den * z + complex(c)
        return num / den


@dataclass(frozen=True)
class SeriesCoeffs:
    """Exact Taylor coefficients a_0..a_N of a rational function at 0."""

    values: Tuple[GaussianRational, ...]

    def __getitem__(self, k: int) -> GaussianRational:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def segment_sum(self, lo: int, hi: int) -> GaussianRational:
        acc = GaussianRational(0)
        for k in range(lo, hi + 1):
            acc = acc + self.values[k]
        return acc


def rational_series(spec: RationalFunctionSpec, N: int) -> SeriesCoeffs:
    """Expand numerator/denominator at 0 via the denominator recurrence.

    a_k = (num_k - sum_{j=1}^{k} den_j * a_{k-j}) / den_0, all exact.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    num = [_as_gaussian(c) for c in spec.numerator.coeffs]
    den = [_as_gaussian(c) for c in spec.denominator.coeffs]
    d0 = den[0]
    out: List[GaussianRational] = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else GaussianRational(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc / d0)
    return SeriesCoeffs(tuple(out))


def extremal_function(n: int) -> RationalFunctionSpec:
    """The equality case of the three-term bound: z^n section(1/z) / section(z).

    The numerator is the coefficient reversal of the degree-n section of
    sqrt(1 + z + z^2) (real coefficients, so conjugation is trivial).  The
    construction is valid because the section is certified zero-free in the
    closed disk first; a certification failure raises.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    section = sqrt_section(2, n)
    cert = certify_zero_free(section, poly_id=f"section(d=2,n={n})")
    if not cert.zero_free:
        raise ArithmeticError(f"section n={n} failed zero-free certification")
    return RationalFunctionSpec(
        _gaussian_poly(list(reversed(section.coeffs))),
        _gaussian_poly(section.coeffs),
    )


def _fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class SzaszInstance:
    """Target pattern mu_0..mu_n with its square-root sequence lambda."""

    mu: Tuple[GaussianRational, ...]
    n: int
    lam: Tuple[GaussianRational, ...]
    exact: bool


def szasz_lambda(mu: Sequence[Coeff], n: int) -> SzaszInstance:
    """lambda with (sum lambda_k z^k)^2 = sum mu_k z^k + O(z^{n+1}).

    Exact when mu_0 is a positive rational square (the harness only uses
    mu_0 = 1); otherwise the square root is taken in floating point and the
    instance is flagged inexact.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    mu_g = tuple(_as_gaussian(c) for c in list(mu)[: n + 1])
    if len(mu_g) != n + 1:
        raise ValueError("mu must provide n + 1 entries")
    mu0 = mu_g[0]
    if not mu0:
        raise ValueError("mu_0 must be nonzero")
    root = _fraction_sqrt(mu0.re) if mu0.is_real else None
    if root is not None and root > 0:
        lam: List[GaussianRational] = [GaussianRational(root)]
        inv2l0 = GaussianRational(Fraction(1) / (2 * root))
        for k in range(1, n + 1):
            acc = mu_g[k]
            for j in range(1, k):
                acc = acc - lam[j] * lam[k - j]
            lam.append(acc * inv2l0)
        return SzaszInstance(mu_g, n, tuple(lam), True)

    # float mode: complex square-root recurrence, stated precision ~1e-15
    lam_f: List[complex] = [complex(mu0) ** 0.5]
    for k in range(1, n + 1):
        acc = complex(mu_g[k])
        for j in range(1, k):
            acc -= lam_f[j] * lam_f[k - j]
        lam_f.append(acc / (2 * lam_f[0]))
    lam_g = tuple(
        GaussianRational(Fraction(v.real).limit_denominator(10**15),
                         Fraction(v.imag).limit_denominator(10**15))
        for v in lam_f
    )
    return SzaszInstance(mu_g, n, lam_g, False)


@dataclass(frozen=True)
class SzaszCheck:
    """Exact comparison of the weighted coefficient sum against sum |lambda|^2."""

    lhs_squared: Fraction
    rhs: Fraction
    holds: bool
    equality: bool

    @property
    def lhs(self) -> float:
        return math.sqrt(float(self.lhs_squared))

    @property
    def rhs_float(self) -> float:
        return float(self.rhs)


def szasz_check(inst: SzaszInstance, spec: RationalFunctionSpec) -> SzaszCheck:
    """Evaluate |sum_k mu_{n-k} a_k| <= sum |lambda_k|^2 on exact series data.

    The caller is responsible for the hypothesis sup|f| <= 1; the harness
    builds its test functions as Blaschke products so it holds by algebra.
    """
    series = rational_series(spec, inst.n)
    acc = GaussianRational(0)
    for k in range(inst.n + 1):
        acc = acc + inst.mu[inst.n - k] * series[k]
    lhs_sq = acc.abs2()
    rhs = Fraction(0)
    for lam in inst.lam:
        rhs += lam.abs2()
    return SzaszCheck(lhs_sq, rhs, lhs_sq <= rhs * rhs, lhs_sq == rhs * rhs)


def triple_pattern(n: int) -> Tuple[GaussianRational, ...]:
    """mu = (1, 1, 1, 0, ..., 0) of length n + 1: three consecutive
    coefficients at the top of a degree-n window."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return tuple(
        GaussianRational(1 if k <= 2 else 0) for k in range(n + 1)
    )


def blaschke_product(zeros: Sequence[GaussianRational]) -> RationalFunctionSpec:
    """Product of factors (z - a)/(1 - conj(a) z); modulus 1 on the circle."""
    num = _gaussian_poly([1])
    den = _gaussian_poly([1])
    for a in zeros:
        a = _as_gaussian(a)
        num = num * _gaussian_poly([-a, 1])
        den = den * _gaussian_poly([1, -a.conjugate()])
    return RationalFunctionSpec(num, den)


def random_blaschke(seed: int, degree: int) -> RationalFunctionSpec:
    """Deterministic Blaschke product with Gaussian-rational zeros, |a| <= 9/10.

    The modulus constraint is enforced by the exact squared-modulus test, so
    the resulting function has supremum exactly 1 on the disk by algebra.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed)
    cap = Fraction(81, 100)
    zeros: List[GaussianRational] = []
    while len(zeros) < degree:
        a = GaussianRational(
            Fraction(rng.randint(-14, 14), 16), Fraction(rng.randint(-14, 14), 16)
        )
        if a.abs2() <= cap:
            zeros.append(a)
    return blaschke_product(zeros)


@dataclass(frozen=True)
class FixtureReport:
    """The two classical counterexample fixtures, recomputed exactly."""

    mobius_abs_sum: Fraction
    blaschke_nonconsecutive_sum: Fraction
    three_term_bound_n2: Fraction
    limit: float

    @property
    def both_exceed_bound(self) -> bool:
        return (
            self.mobius_abs_sum > self.three_term_bound_n2
            and self.blaschke_nonconsecutive_sum > self.three_term_bound_n2
        )

    @property
    def both_exceed_limit(self) -> bool:
        return (
            float(self.mobius_abs_sum) > self.limit
            and float(self.blaschke_nonconsecutive_sum) > self.limit
        )


def coefficient_fixtures() -> FixtureReport:
    """Recompute the absolute-sum and non-consecutive-sum fixtures.

    The Moebius transform (z - 1/2)/(1 - z/2) gives |a_0| + |a_1| + |a_2|,
    and (1 + z + 2z^3)/(2 + z^2 + z^3) gives a_0 + a_1 + a_3; both exceed the
    three-term bound 89/64 and its limit, showing the three-term bound is
    specific to moduli of consecutive-coefficient sums.
    """
    from segbounds.bounds import trinomial_bound, trinomial_limit

    mobius = RationalFunctionSpec(
        _gaussian_poly([Fraction(-1, 2), 1]), _gaussian_poly([1, Fraction(-1, 2)])
    )
    ms = rational_series(mobius, 2)
    mob_sum = sum((abs(ms[k].re) for k in range(3)), Fraction(0))
    if not all(ms[k].is_real for k in range(3)):
        raise AssertionError("Moebius series should be real")

    blas = RationalFunctionSpec(
        _gaussian_poly([1, 1, 0, 2]), _gaussian_poly([2, 0, 1, 1])
    )
    bs = rational_series(blas, 3)
    blas_sum = (bs[0] + bs[1] + bs[3]).re
    if not all(bs[k].is_real for k in range(4)):
        raise AssertionError("Blaschke series should be real")

    return FixtureReport(mob_sum, blas_sum, trinomial_bound(2), trinomial_limit())
