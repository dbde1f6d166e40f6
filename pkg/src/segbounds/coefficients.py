"""Taylor coefficients of sqrt(1 + z + ... + z^d) and of sqrt(1 - z).

Two independent generators are provided for the square-root series: a
D-finite recurrence (derived from 2*p*f' = p'*f for f = sqrt(p)) and a
coefficient-wise square-root-of-a-polynomial oracle.  They must agree exactly;
tests and the CLI cross-check them.

Tables are cached per d and grown incrementally; all values are exact
``Fraction`` instances and immutable once returned.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from segbounds.exact.poly import Poly

_lock = threading.RLock()
_recurrence_cache: Dict[int, List[Fraction]] = {}
_sum_cache: Dict[int, List[Fraction]] = {}
_square_sum_cache: Dict[int, List[Fraction]] = {}
_sqrt1mz_cache: List[Fraction] = [Fraction(1)]

RECURRENCE = "recurrence"
ORACLE = "convolution-oracle"


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients b_0..b_N of sqrt(1 + z + ... + z^d)."""

    d: int
    N: int
    values: Tuple[Fraction, ...]
    provenance: str

    def __post_init__(self):
        if self.values and self.values[0] != 1:
            raise ValueError("first coefficient must be 1")

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class HelperTable:
    """Coefficients c_0..c_N of sqrt(1 - z); c_0 = 1 and c_k < 0 for k >= 1."""

    N: int
    values: Tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def _grow_recurrence(d: int, N: int) -> List[Fraction]:
    """Extend the cached coefficient list for sqrt(1 + z + ... + z^d) to index N.

    Differentiating f^2 = 1 + z + ... + z^d gives 2*p*f' = p'*f, and matching
    the coefficient of z^(k-1) yields

        2k * b_k = sum_{j=1}^{min(d,k)} (3j - 2k) * b_{k-j},   b_0 = 1.

    For d = 2 this is the familiar 2k b_k = (3-2k) b_{k-1} + (6-2k) b_{k-2}.
    """
    values = _recurrence_cache.setdefault(d, [Fraction(1)])
    for k in range(len(values), N + 1):
        acc = Fraction(0)
        for j in range(1, min(d, k) + 1):
            acc += (3 * j - 2 * k) * values[k - j]
        values.append(acc / (2 * k))
    return values


def sqrt_coeffs_recurrence(d: int, N: int) -> CoeffTable:
    """b_0..b_N for sqrt(1 + z + ... + z^d) via the D-finite recurrence."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    with _lock:
        values = _grow_recurrence(d, N)
        return CoeffTable(d, N, tuple(values[: N + 1]), RECURRENCE)


def sqrt_coeffs_oracle(d: int, N: int) -> CoeffTable:
    """Independent generator: solve (sum b_k z^k)^2 = 1 + z + ... + z^d termwise.

    b_k = (p_k - sum_{j=1}^{k-1} b_j b_{k-j}) / 2 with p_k = 1 for k <= d,
    else 0.  Deliberately shares no code or cache with the recurrence route.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    values = [Fraction(1)]
    for k in range(1, N + 1):
        pk = Fraction(1 if k <= d else 0)
        acc = pk
        for j in range(1, k):
            acc -= values[j] * values[k - j]
        values.append(acc / 2)
    return CoeffTable(d, N, tuple(values), ORACLE)


def sqrt_section(d: int, n: int) -> Poly:
    """The degree-n Taylor polynomial of sqrt(1 + z + ... + z^d)."""
    return Poly(sqrt_coeffs_recurrence(d, n).values)


@dataclass(frozen=True)
class SignVerdict:
    conforms: bool
    first_violation: Optional[int] = None


def check_sign_pattern(table: CoeffTable, report_only: bool = False) -> SignVerdict:
    """d = 2 sign structure: b_k > 0 iff 3 does not divide k, except b_0 = 1.

    The statement is specific to d = 2; pass ``report_only`` to evaluate the
    same predicate informatively for other d instead of raising.
    """
    if table.d != 2 and not report_only:
        raise ValueError("sign lemma is stated for d = 2 only")
    for k, v in enumerate(table.values):
        if k == 0:
            if v != 1:
                return SignVerdict(False, 0)
        elif k % 3 == 0:
            if not v < 0:
                return SignVerdict(False, k)
        else:
            if not v > 0:
                return SignVerdict(False, k)
    return SignVerdict(True)


def check_induction_step(table: CoeffTable) -> SignVerdict:
    """Oscillation step for d = 2: 0 < b_k < b_(k+1) forces
    b_(k+2) < 0 < b_(k+3) < b_(k+4), checked at every applicable index."""
    if table.d != 2:
        raise ValueError("oscillation step is stated for d = 2 only")
    v = table.values
    for k in range(1, len(v) - 4):
        if 0 < v[k] < v[k + 1]:
            if not (v[k + 2] < 0 < v[k + 3] < v[k + 4]):
                return SignVerdict(False, k)
    return SignVerdict(True)


def sqrt_one_minus_z_coeffs(N: int) -> HelperTable:
    """c_0..c_N of sqrt(1 - z): c_k = (-1)^k C(1/2, k), via c_k/c_(k-1) = (k - 3/2)/k."""
    if N < 0:
        raise ValueError("N must be >= 0")
    with _lock:
        values = _sqrt1mz_cache
        for k in range(len(values), N + 1):
            values.append(values[k - 1] * Fraction(2 * k - 3, 2 * k))
        return HelperTable(N, tuple(values[: N + 1]))


def _prefix_sums(d: int, n: int) -> List[Fraction]:
    sums = _sum_cache.setdefault(d, [])
    if len(sums) <= n:
        values = _grow_recurrence(d, n)
        if not sums:
            sums.append(values[0])
        for k in range(len(sums), n + 1):
            sums.append(sums[k - 1] + values[k])
    return sums


def _prefix_square_sums(d: int, n: int) -> List[Fraction]:
    sums = _square_sum_cache.setdefault(d, [])
    if len(sums) <= n:
        values = _grow_recurrence(d, n)
        if not sums:
            sums.append(values[0] * values[0])
        for k in range(len(sums), n + 1):
            sums.append(sums[k - 1] + values[k] * values[k])
    return sums


def taylor_at_one(d: int, n: int) -> Fraction:
    """Value at z = 1 of the degree-n section: sum_{k<=n} b_k."""
    if d < 1:
        raise ValueError("d must be >= 1")
    with _lock:
        return _prefix_sums(d, n)[n]


def taylor_at_one_exceeds_sqrt3_third(n: int) -> bool:
    """Exact form of the d = 2 lower bound: T_n(1) > sqrt(3)/3 iff the value is
    positive and its square exceeds 1/3 (no irrational numbers needed)."""
    v = taylor_at_one(2, n)
    return v > 0 and v * v > Fraction(1, 3)


def squared_sum(d: int, n: int) -> Fraction:
    """sum_{k<=n} b_k^2, the sharp segment bound sequence for gap d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    with _lock:
        return _prefix_square_sums(d, n)[n]


def triple_index_partial(N: int) -> Fraction:
    """d = 2 partial sums over indices divisible by 3: sum_{k<=N} b_(3k).

    Strictly decreasing in N (the summands are negative past k = 0) and
    squares to more than 1/3 for every N.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    with _lock:
        values = _grow_recurrence(2, 3 * N)
        acc = Fraction(0)
        for k in range(N + 1):
            acc += values[3 * k]
        return acc
