"""Exact positivity certificates for the cosine polynomials of the
square-root coefficient families.

The cosine polynomial with coefficients b_0..b_n is positive on all of R
exactly when its Chebyshev image Q has no root in [-1, 1] and is positive at
one sample point: periodicity reduces the line to [0, 2pi] and evenness to
[0, pi], and x = cos t maps that interval onto [-1, 1] exactly.  Certificates
therefore rest on Sturm counts.  Tangential zeros (Q >= 0 with a root) form
their own verdict class since the positivity claim under test is strict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from segbounds.coefficients import sqrt_coeffs_recurrence
from segbounds.exact.cheb import cheb_from_cosines
from segbounds.exact.poly import Poly
from segbounds.exact.sturm import (
    SturmChain,
    isolate_real_roots,
    nudge_interval_inward,
    sturm_count,
)
from segbounds.runtime import parallel_map

POSITIVE = "positive"
NONNEG_WITH_ZERO = "nonnegative-with-zero"
WITNESS = "nonpositive-witness"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class TrigPoly:
    """Cosine polynomial sum_k cos_coeffs[k] * cos(k t)."""

    cos_coeffs: Tuple[Fraction, ...]

    def __call__(self, t: float) -> float:
        return float(
            sum(float(c) * math.cos(k * t) for k, c in enumerate(self.cos_coeffs))
        )

    def grid_min(self, points: int = 100_000) -> float:
        """Float minimum over a uniform t-grid on [0, pi] (even + periodic)."""
        t = np.linspace(0.0, np.pi, points)
        acc = np.zeros_like(t)
        for k, c in enumerate(self.cos_coeffs):
            fc = float(c)
            if fc:
                acc += fc * np.cos(k * t)
        return float(acc.min())


def trig_poly(d: int, n: int) -> TrigPoly:
    """Cosine polynomial built from the sqrt(1 + z + ... + z^d) coefficients."""
    table = sqrt_coeffs_recurrence(d, n)
    return TrigPoly(table.values)


@dataclass(frozen=True)
class PositivityCertificate:
    """Exact verdict about strict positivity on R, with checkable witnesses.

    For a ``nonpositive-witness`` verdict the interval [witness_low,
    witness_high] lies in [-1, 1] and the Chebyshev image is negative on all
    of it; witness_point is a rational point inside with witness_value < 0
    (both in the x = cos t coordinate).  For ``nonnegative-with-zero`` the
    interval isolates a zero that is touched without a sign change.
    """

    d: Optional[int]
    n: Optional[int]
    verdict: str
    witness_low: Optional[Fraction] = None
    witness_high: Optional[Fraction] = None
    witness_point: Optional[Fraction] = None
    witness_value: Optional[Fraction] = None
    min_estimate: float = math.nan

    @property
    def positive(self) -> bool:
        return self.verdict == POSITIVE


def _gap_samples(q: Poly, regions, chain) -> List[Fraction]:
    """One non-root rational point per sign-constant gap of [-1, 1]."""
    one, minus_one = Fraction(1), Fraction(-1)
    samples: List[Fraction] = []
    if not regions:
        samples.append(Fraction(0) if q(Fraction(0)) != 0 else Fraction(1, 3))
        return samples
    regions = list(regions)
    regions[0] = nudge_interval_inward(chain, regions[0], lo_min=minus_one)
    regions[-1] = nudge_interval_inward(chain, regions[-1], hi_max=one)
    samples.append(minus_one if q(minus_one) != 0 else regions[0].lo)
    for i in range(len(regions) - 1):
        samples.append(regions[i].hi)
    samples.append(one if q(one) != 0 else regions[-1].hi)
    return samples


def positivity_certificate(
    p: TrigPoly,
    d: Optional[int] = None,
    n: Optional[int] = None,
    grid: int = 100_000,
) -> PositivityCertificate:
    """Decide strict positivity of the cosine polynomial on R, exactly.

    Converts to the Chebyshev image Q, isolates every distinct root of Q in
    [-1, 1], and inspects the exact sign of Q on each root-free gap.  A
    negative gap yields a witness interval on which Q is provably negative
    throughout; roots with no adjacent negative gap downgrade the verdict to
    nonnegative-with-zero.  A float grid minimum is attached as a
    cross-check estimate only; it plays no part in the verdict.
    """
    if not any(c != 0 for c in p.cos_coeffs):
        raise ValueError("nonzero cosine polynomial required")
    q = cheb_from_cosines(p.cos_coeffs)
    min_est = p.grid_min(grid) if grid else math.nan

    one, minus_one = Fraction(1), Fraction(-1)
    endpoint_zero = q(one) == 0 or q(minus_one) == 0
    if q.degree < 1:
        verdict = POSITIVE if q.coeffs[0] > 0 else WITNESS
        if verdict == WITNESS:
            return PositivityCertificate(
                d, n, WITNESS, minus_one, one, Fraction(0), q.coeffs[0], min_est
            )
        return PositivityCertificate(d, n, verdict, min_estimate=min_est)

    # primary decision: distinct-root count on [-1, 1] (streaming, low memory);
    # isolation is only needed when roots exist and witnesses must be located
    if sturm_count(q, minus_one, one, closed=True) == 0:
        v0 = q(Fraction(0))
        if v0 > 0:
            return PositivityCertificate(d, n, POSITIVE, min_estimate=min_est)
        return PositivityCertificate(
            d, n, WITNESS, minus_one, one, Fraction(0), v0, min_est
        )

    regions = isolate_real_roots(q, minus_one, one)
    chain = SturmChain(q) if regions else None
    samples = _gap_samples(q, regions, chain)
    values = [q(x) for x in samples]

    for idx, (x, v) in enumerate(zip(samples, values)):
        if v < 0:
            # rational core of the sign-constant gap containing the sample:
            # q is negative on all of [lo, hi]
            if regions:
                lo = regions[idx - 1].hi if idx > 0 else samples[0]
                hi = regions[idx].lo if idx < len(regions) else samples[-1]
            else:
                lo = minus_one if q(minus_one) < 0 else x
                hi = one if q(one) < 0 else x
            if not lo <= x <= hi:
                lo = hi = x
            return PositivityCertificate(d, n, WITNESS, lo, hi, x, v, min_est)

    if regions or endpoint_zero:
        lo, hi = (regions[0].lo, regions[0].hi) if regions else (one, one)
        if not regions and q(minus_one) == 0:
            lo = hi = minus_one
        return PositivityCertificate(d, n, NONNEG_WITH_ZERO, lo, hi, min_estimate=min_est)
    return PositivityCertificate(d, n, POSITIVE, min_estimate=min_est)


@dataclass(frozen=True)
class TailVerdict:
    """The gap-1 positivity route: sum_{k>=1} |b_k| = b_0 for d = 1, so every
    finite absolute tail sum stays strictly below 1."""

    n: int
    partial_abs_sum: Fraction
    strict: bool

    @property
    def implies_positive(self) -> bool:
        return self.strict


def d1_tail_argument(n: int) -> TailVerdict:
    """Check sum_{k=1}^n |b_k^(1)| < 1 exactly; this forces the d = 1 cosine
    polynomial to be positive everywhere."""
    table = sqrt_coeffs_recurrence(1, n)
    s = sum((abs(v) for v in table.values[1:]), Fraction(0))
    return TailVerdict(n, s, s < 1)


def _certificate_job(args: Tuple[int, int, int]) -> PositivityCertificate:
    d, n, grid = args
    return positivity_certificate(trig_poly(d, n), d=d, n=n, grid=grid)


def scan_conjecture(
    d_values: Sequence[int],
    n_values: Sequence[int],
    grid: int = 100_000,
) -> Tuple[PositivityCertificate, ...]:
    """Certificates for every (d, n) pair, in deterministic (d, n) order.

    The scan reports evidence only: it never asserts the positivity claim
    itself, and any non-positive verdict is surfaced with its witness rather
    than treated as an internal error.
    """
    jobs = [(d, n, grid) for d in d_values for n in n_values]
    certs = parallel_map(_certificate_job, jobs)
    return tuple(certs)
