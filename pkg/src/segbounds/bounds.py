"""Sharp bound sequences for power-series segments and their limits.

For a function bounded by 1 on the unit disk, the best possible bound for a
segment of n - m + 1 consecutive Taylor coefficients is a sum of squared
square-root-series coefficients; the families here are the classical full
partial-sum bound (squares of C(-1/2, k), divergent), the two-term bound
(squares of C(1/2, k), limit 4/pi), and the three-term bound (squares of the
sqrt(1 + z + z^2) coefficients, limit 1/3 + 2*sqrt(3)/pi).  The limiting
constant for a general gap d is the mean of |1 + e^{it} + ... + e^{dit}| over
the circle, evaluated by adaptive quadrature split at the integrand's zeros.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from scipy.integrate import quad

from segbounds.coefficients import squared_sum

_lock = threading.RLock()
_landau_sums: List[Fraction] = []
_szasz_sums: List[Fraction] = []

LANDAU = "landau"
SZASZ_PAIR = "szasz-pair"
TRINOMIAL = "trinomial"
GENERAL_D = "general-d"


def four_over_pi() -> float:
    """Limit of the two-term bound sequence."""
    return 4.0 / math.pi


def trinomial_limit() -> float:
    """Limit of the three-term bound sequence: 1/3 + 2*sqrt(3)/pi."""
    return 1.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi


def _grow_square_sums(sums: List[Fraction], ratio_num, n: int) -> None:
    """Extend prefix sums of C(+-1/2, k)^2 using the term ratio recurrence."""
    if not sums:
        sums.append(Fraction(1))
    # recover the current squared term from the last two prefix values
    k = len(sums) - 1
    term = Fraction(1) if k == 0 else sums[k] - sums[k - 1]
    while len(sums) <= n:
        k = len(sums)
        r = ratio_num(k)
        term = term * r * r
        sums.append(sums[-1] + term)


def landau_bound(n: int) -> Fraction:
    """Partial-sum bound: sum_{k<=n} C(-1/2, k)^2; increases without limit."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        _grow_square_sums(_landau_sums, lambda k: Fraction(-(2 * k - 1), 2 * k), n)
        return _landau_sums[n]


def szasz_pair_bound(n: int) -> Fraction:
    """Two-term segment bound: sum_{k<=n} C(1/2, k)^2; limit 4/pi."""
    if n < 0:
        raise ValueError("n must be >= 0")
    with _lock:
        _grow_square_sums(_szasz_sums, lambda k: Fraction(3 - 2 * k, 2 * k), n)
        return _szasz_sums[n]


def trinomial_bound(n: int) -> Fraction:
    """Three-term segment bound: sum_{k<=n} b_k^2 for the d = 2 coefficients."""
    return squared_sum(2, n)


def segment_limit(d: int, tol: float = 1e-9) -> float:
    """(1/2pi) * integral of |1 + e^{it} + ... + e^{dit}| over [0, 2pi].

    The integrand is |sin((d+1)t/2) / sin(t/2)| with zeros at t = 2pi*m/(d+1);
    each piece between consecutive zeros is smooth and integrated by adaptive
    quadrature.  The accumulated absolute error estimate must stay below
    ``tol``.
    """
    if d < 1:
        raise ValueError("d must be >= 1")

    def kernel(t: float) -> float:
        acc = complex(0.0)
        for j in range(d + 1):
            acc += complex(math.cos(j * t), math.sin(j * t))
        return abs(acc)

    nodes = [2.0 * math.pi * m / (d + 1) for m in range(d + 2)]
    total = 0.0
    err = 0.0
    for a, b in zip(nodes[:-1], nodes[1:]):
        val, e = quad(kernel, a, b, epsabs=tol * 1e-3, epsrel=1e-13, limit=200)
        total += val
        err += e
    if err > tol:
        raise ArithmeticError(f"quadrature error {err:.3e} exceeds {tol:.1e}")
    return total / (2.0 * math.pi)


def segment_limit_closed_form(d: int) -> float:
    """Independent route: exact piecewise antiderivative of the kernel.

    Writing the modulus kernel as |K(t)| with K real (a shifted Dirichlet
    kernel), each span between consecutive zeros has constant sign, so the
    integral is a sum of |F(t_{m+1}) - F(t_m)| for the elementary
    antiderivative F.  Used to cross-check the quadrature route.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d % 2 == 0:

        def anti(t: float) -> float:
            return t + 2.0 * sum(math.sin(m * t) / m for m in range(1, d // 2 + 1))

    else:

        def anti(t: float) -> float:
            return 4.0 * sum(
                math.sin(j * t / 2.0) / j for j in range(1, d + 1, 2)
            )

    nodes = [2.0 * math.pi * m / (d + 1) for m in range(d + 2)]
    total = sum(abs(anti(b) - anti(a)) for a, b in zip(nodes[:-1], nodes[1:]))
    return total / (2.0 * math.pi)


@dataclass(frozen=True)
class BoundReport:
    """One row of a bound table: exact value, float rendering, limit and gap."""

    family: str
    n: int
    exact_value: Optional[Fraction]
    float_value: float
    limit: Optional[float]
    gap_to_limit: Optional[float]


def bound_report(family: str, n: int, d: int = 2) -> BoundReport:
    if family == LANDAU:
        v = landau_bound(n)
        return BoundReport(family, n, v, float(v), None, None)
    if family == SZASZ_PAIR:
        v = szasz_pair_bound(n)
        lim = four_over_pi()
        return BoundReport(family, n, v, float(v), lim, lim - float(v))
    if family == TRINOMIAL:
        v = trinomial_bound(n)
        lim = trinomial_limit()
        return BoundReport(family, n, v, float(v), lim, lim - float(v))
    if family == GENERAL_D:
        v = squared_sum(d, n)
        lim = segment_limit(d)
        return BoundReport(family, n, v, float(v), lim, lim - float(v))
    raise ValueError(f"unknown bound family: {family}")
