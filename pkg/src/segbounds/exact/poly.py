"""Dense univariate polynomials over exact coefficient fields.

``Poly`` stores coefficients in ascending degree order with trailing zeros
trimmed; the empty tuple is the zero polynomial.  Coefficient arithmetic is
duck-typed: ``fractions.Fraction`` and ``GaussianRational`` both work, as does
anything supporting ring operations and comparison with 0.

The ground rational type is ``fractions.Fraction``: it already maintains the
reduced-form invariant (gcd(|num|, den) = 1, den > 0, zero is 0/1), so this
module re-exports it as ``Rational`` rather than wrapping it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class Poly:
    """Immutable dense polynomial; ``coeffs[k]`` is the degree-k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            zero = a[0] * 0
            out = [zero] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca == 0:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        if c == 0:
            return Poly()
        return Poly([a * c for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        """Exact field division: returns (quotient, remainder)."""
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(), self
        lead_inv = 1 / other.leading if not isinstance(other.leading, int) else Fraction(1, other.leading)
        rem = list(self.coeffs)
        db = other.degree
        quo = [self.coeffs[0] * 0] * (self.degree - db + 1)
        for k in range(len(quo) - 1, -1, -1):
            q = rem[db + k] * lead_inv
            quo[k] = q
            if q != 0:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - q * c
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- calculus and evaluation -------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for any value supporting * and +."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.leading
        inv = 1 / lead if not isinstance(lead, int) else Fraction(1, lead)
        return self.scale(inv)

    def reversed(self) -> "Poly":
        """Coefficient reversal z^deg * p(1/z); drops leading zeros of the result."""
        return Poly(list(reversed(self.coeffs)))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        zero = self.coeffs[0] * 0
        return Poly([zero] * k + list(self.coeffs))

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x_minus(cls, r) -> "Poly":
        """The linear factor x - r."""
        return cls([-r, 1 if not isinstance(r, Fraction) else Fraction(1)])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "Poly":
        p = cls([Fraction(1)])
        for r in roots:
            p = p * cls.x_minus(Fraction(r) if isinstance(r, int) else r)
        return p


def falling_factorial(x: Scalar, k: int) -> Fraction:
    """x(x-1)...(x-k+1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("falling factorial needs k >= 0")
    x = Fraction(x)
    acc = Fraction(1)
    for i in range(k):
        acc *= x - i
    return acc


def half_binomial(half: Scalar, k: int) -> Fraction:
    """Binomial coefficient C(+-1/2, k), exactly."""
    half = Fraction(half)
    if half not in (Fraction(1, 2), Fraction(-1, 2)):
        raise ValueError("first argument must be +1/2 or -1/2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = falling_factorial(half, k)
    for i in range(2, k + 1):
        num /= i
    return num


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the exact Euclidean remainder sequence over Fractions.

    Coefficient growth along the remainder sequence is accepted; the degrees
    handled by this package stay small enough that no subresultant machinery
    is needed here.  (Root *counting* uses the integer chain in
    ``segbounds.exact.sturm``, which is where large degrees occur.)
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def square_free_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic: same distinct roots, all simple."""
    if p.is_zero:
        raise ValueError("square-free part of the zero polynomial is undefined")
    if p.degree == 0:
        return Poly([Fraction(1)])
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return (p // g).monic()
