"""Sturm-sequence root counting and isolation over exact rationals.

The chain is computed over integers (coefficients cleared of denominators)
with each remainder reduced by its positive content, so every element is a
positive-constant multiple of the canonical Sturm-chain element.  Sign
variations are therefore identical to the canonical chain's, while coefficient
growth stays at the subresultant level instead of exploding.

For a polynomial that is not square-free the chain ends at (a multiple of)
gcd(p, p'); the classical sign-variation count V(a) - V(b) then counts the
*distinct* roots in (a, b) whenever neither endpoint is a root, which is the
semantics exposed here.  Endpoint roots are removed by exact deflation before
counting, so no epsilon adjustments are ever needed.

``gmpy2.mpz`` is used for coefficient arithmetic when available (it is a hard
dependency of the package, but the pure-int fallback keeps the module usable
without it).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from segbounds.exact.poly import Poly

try:
    from gmpy2 import gcd as _gcd
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from math import gcd as _gcd

    _mpz = int


def _int_coeffs(p: Poly) -> List:
    """Clear denominators and divide by content; sign pattern preserved."""
    dens = [c.denominator for c in p.coeffs]
    scale = reduce(lcm, dens, 1)
    out = [_mpz(c.numerator * (scale // c.denominator)) for c in p.coeffs]
    g = _content(out)
    if g > 1:
        out = [c // g for c in out]
    return out


def _content(cs: Sequence) -> int:
    g = _mpz(0)
    for c in cs:
        if c:
            g = _gcd(g, c)
            if g == 1:
                return g
    return g if g else _mpz(1)


def _derivative_int(cs: Sequence) -> List:
    return [c * k for k, c in enumerate(cs)][1:]


def _prem_positive(a: Sequence, b: Sequence) -> List:
    """Positive-constant multiple of the remainder of a by b, over integers."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    passes = 0
    while len(r) - 1 >= db:
        lr = r.pop()
        for i in range(len(r)):
            r[i] *= lb
        off = len(r) - db  # popped term had degree len(r), reduce against x^off * b
        for i in range(db):
            r[off + i] -= lr * b[i]
        while r and not r[-1]:
            r.pop()
        passes += 1
    if lb < 0 and passes % 2 == 1:
        return [-c for c in r]
    return r


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _eval_scaled(cs: Sequence, num, den):
    """den^deg * p(num/den); its sign equals sign(p(num/den)) since den > 0."""
    acc = cs[-1]
    dp = 1
    for c in reversed(cs[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return acc


@dataclass(frozen=True)
class IsolatedRoot:
    """Open interval (lo, hi) containing exactly one distinct real root."""

    lo: Fraction
    hi: Fraction

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


class SturmChain:
    """Generalized Sturm chain of a nonzero polynomial, retained for queries."""

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ValueError("indeterminate root count: zero polynomial")
        self.poly = p
        f0 = _int_coeffs(p)
        self._chain: List[List] = [f0]
        if len(f0) > 1:
            f1 = _derivative_int(f0)
            g = _content(f1)
            if g > 1:
                f1 = [c // g for c in f1]
            self._chain.append(f1)
            while len(self._chain[-1]) > 1:
                r = _prem_positive(self._chain[-2], self._chain[-1])
                if not r:
                    break
                g = _content(r)
                if g > 1:
                    r = [c // g for c in r]
                self._chain.append([-c for c in r])

    def gcd_poly(self) -> Poly:
        """Monic gcd(p, p'), recovered from the chain tail (constant for p square-free)."""
        if len(self._chain) == 1:
            return Poly([Fraction(1)])
        tail = self._chain[-1]
        f = Poly([Fraction(int(c)) for c in tail])
        return f.monic()

    def variations(self, x: Fraction) -> int:
        num, den = _mpz(x.numerator), _mpz(x.denominator)
        count = 0
        last = 0
        for cs in self._chain:
            s = _sign(_eval_scaled(cs, num, den))
            if s != 0:
                if last != 0 and s != last:
                    count += 1
                last = s
        return count

    def count_open(self, a: Fraction, b: Fraction) -> int:
        """Distinct roots in (a, b); requires p(a) != 0 != p(b)."""
        n = self.variations(a) - self.variations(b)
        if n < 0:
            raise AssertionError("sign-variation count went negative")
        return n


def _deflate_root(p: Poly, r: Fraction) -> Poly:
    """Divide out all factors (x - r); requires p(r) == 0 on entry."""
    while not p.is_zero and p(r) == 0:
        p = p // Poly.x_minus(Fraction(r))
    return p


def _variation_diff_streaming(p: Poly, a: Fraction, b: Fraction) -> int:
    """V(a) - V(b) computed while generating the chain, keeping two elements.

    Equivalent to SturmChain(p).count_open(a, b) but with O(degree) memory;
    used by ``sturm_count`` where no chain reuse is needed.
    """
    na, da = _mpz(a.numerator), _mpz(a.denominator)
    nb, db = _mpz(b.numerator), _mpz(b.denominator)
    va = vb = 0
    last_a = last_b = 0

    def feed(cs) -> None:
        nonlocal va, vb, last_a, last_b
        sa = _sign(_eval_scaled(cs, na, da))
        if sa != 0:
            if last_a != 0 and sa != last_a:
                va += 1
            last_a = sa
        sb = _sign(_eval_scaled(cs, nb, db))
        if sb != 0:
            if last_b != 0 and sb != last_b:
                vb += 1
            last_b = sb

    f0 = _int_coeffs(p)
    feed(f0)
    if len(f0) > 1:
        f1 = _derivative_int(f0)
        g = _content(f1)
        if g > 1:
            f1 = [c // g for c in f1]
        feed(f1)
        prev, cur = f0, f1
        while len(cur) > 1:
            r = _prem_positive(prev, cur)
            if not r:
                break
            g = _content(r)
            if g > 1:
                r = [c // g for c in r]
            r = [-c for c in r]
            feed(r)
            prev, cur = cur, r
    diff = va - vb
    if diff < 0:
        raise AssertionError("sign-variation count went negative")
    return diff


def sturm_count(p: Poly, a: Fraction, b: Fraction, closed: bool = True) -> int:
    """Number of distinct real roots of p in [a, b] (closed) or (a, b).

    Multiplicities are ignored (the chain tail absorbs gcd(p, p') exactly as
    dividing by the square-free part would).  Endpoint roots are detected by
    direct evaluation and included only when ``closed`` is set.
    """
    if p.is_zero:
        raise ValueError("indeterminate root count: zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    root_a = p(a) == 0
    root_b = p(b) == 0
    q = p
    if root_a:
        q = _deflate_root(q, a)
    if root_b and not q.is_zero and q(b) == 0:
        q = _deflate_root(q, b)
    interior = 0
    if q.degree >= 1:
        interior = _variation_diff_streaming(q, a, b)
    if closed:
        interior += int(root_a) + int(root_b)
    return interior


def count_roots_with_multiplicity(
    p: Poly, a: Fraction, b: Fraction, closed: bool = True
) -> int:
    """Roots in the interval counted with multiplicity.

    Iterates distinct-root counting on p, gcd(p, p'), gcd of that with its
    derivative, and so on; a root of multiplicity m is counted once at each of
    the first m levels.
    """
    total = 0
    cur = p
    while not cur.is_zero and cur.degree >= 1:
        chain_input = cur
        total += sturm_count(chain_input, a, b, closed)
        g = SturmChain(cur).gcd_poly()
        if g.degree < 1:
            break
        cur = g
    return total


def _nonroot_split(p: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """A rational point strictly inside (lo, hi) that is not a root of p."""
    for den in range(2, p.degree + 4):
        for num in range(1, den):
            m = lo + (hi - lo) * Fraction(num, den)
            if p(m) != 0:
                return m
    raise RuntimeError("could not find a non-root split point")


def isolate_real_roots(p: Poly, a: Fraction, b: Fraction) -> Tuple[IsolatedRoot, ...]:
    """Disjoint isolating intervals for the distinct roots of p in (a, b).

    Every returned interval lies inside (a, b), has non-root rational
    endpoints, and contains exactly one distinct root of p.  Intervals are
    returned in increasing order.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    q = p
    if q(a) == 0:
        q = _deflate_root(q, a)
    if not q.is_zero and q(b) == 0:
        q = _deflate_root(q, b)
    if q.degree < 1:
        return ()
    chain = SturmChain(q)
    out: List[IsolatedRoot] = []
    stack = [(a, b, chain.count_open(a, b))]
    guard = 0
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatedRoot(lo, hi))
            continue
        guard += 1
        if guard > 10000:
            raise RuntimeError("root isolation failed to converge")
        m = _nonroot_split(q, lo, hi)
        left = chain.count_open(lo, m)
        stack.append((lo, m, left))
        stack.append((m, hi, n - left))
    out.sort(key=lambda r: r.lo)
    return tuple(out)


def refine_isolating_interval(
    chain: SturmChain, region: IsolatedRoot, rounds: int = 1
) -> IsolatedRoot:
    """Halve (approximately) an isolating interval ``rounds`` times."""
    lo, hi = region.lo, region.hi
    for _ in range(rounds):
        m = _nonroot_split(chain.poly, lo, hi)
        if chain.count_open(lo, m) == 1:
            hi = m
        else:
            lo = m
    return IsolatedRoot(lo, hi)


def nudge_interval_inward(
    chain: SturmChain,
    region: IsolatedRoot,
    lo_min: Optional[Fraction] = None,
    hi_max: Optional[Fraction] = None,
    max_rounds: int = 512,
) -> IsolatedRoot:
    """Shrink an isolating interval until lo > lo_min and hi < hi_max.

    The root stays inside.  Used when an isolating interval abuts the end of
    the search range and a strictly interior rational endpoint is needed.
    """
    lo, hi = region.lo, region.hi
    p = chain.poly
    if lo_min is not None and lo <= lo_min:
        q = 4
        for _ in range(max_rounds):
            m = lo + (hi - lo) / q
            if p(m) == 0:
                q += 1
                continue
            if chain.count_open(m, hi) == 1:
                lo = m
                break
            hi = m  # root lies in (lo, m); try closer to lo
        else:
            raise RuntimeError("endpoint nudge did not converge")
    if hi_max is not None and hi >= hi_max:
        q = 4
        for _ in range(max_rounds):
            m = hi - (hi - lo) / q
            if p(m) == 0:
                q += 1
                continue
            if chain.count_open(lo, m) == 1:
                hi = m
                break
            lo = m
        else:
            raise RuntimeError("endpoint nudge did not converge")
    return IsolatedRoot(lo, hi)


def sign_at_isolated_root(
    f: Poly, g_chain: SturmChain, region: IsolatedRoot, max_rounds: int = 256
) -> int:
    """Sign of f at the unique root of g in ``region``; requires f nonzero there.

    Shrinks the isolating interval until f is root-free on it with equal
    nonzero endpoint signs, which pins the sign of f at the root exactly.
    """
    if f.is_zero:
        raise ValueError("f must be nonzero")
    f_chain: Optional[SturmChain] = SturmChain(f) if f.degree >= 1 else None
    lo, hi = region.lo, region.hi
    for _ in range(max_rounds):
        flo, fhi = f(lo), f(hi)
        if flo != 0 and fhi != 0:
            s_lo, s_hi = _sign(flo), _sign(fhi)
            if s_lo == s_hi and (
                f_chain is None or f_chain.count_open(lo, hi) == 0
            ):
                return s_lo
        m = _nonroot_split(g_chain.poly, lo, hi)
        if g_chain.count_open(lo, m) == 1:
            hi = m
        else:
            lo = m
    raise RuntimeError(
        "sign refinement did not converge; f may vanish at the root"
    )
