"""Kernel tests: polynomials, falling factorials, Sturm counting, Chebyshev."""

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segbounds.exact import (
    GaussianRational,
    Poly,
    cheb_from_cosines,
    circle_imag_part,
    circle_real_part,
    count_roots_with_multiplicity,
    falling_factorial,
    half_binomial,
    isolate_real_roots,
    poly_gcd,
    square_free_part,
    sturm_count,
)

rationals = st.fractions(min_value=-60, max_value=60, max_denominator=16)
small_roots = st.lists(
    st.fractions(min_value=-3, max_value=3, max_denominator=8), min_size=1, max_size=5
)


class TestFallingFactorial:
    def test_empty_product(self):
        assert falling_factorial(F(7, 3), 0) == 1
        assert falling_factorial(F(-5), 0) == 1

    def test_direct_products(self):
        assert falling_factorial(F(5, 2), 3) == F(15, 8)
        assert falling_factorial(F(3, 2), 2) == F(3, 4)
        assert falling_factorial(F(4), 2) == 12

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            falling_factorial(F(1), -1)

    @given(x=rationals, k=st.integers(min_value=0, max_value=200))
    @settings(max_examples=40, deadline=None)
    def test_step_recurrence(self, x, k):
        assert falling_factorial(x, k + 1) == falling_factorial(x, k) * (x - k)


class TestHalfBinomial:
    def test_basic_values(self):
        assert half_binomial(F(1, 2), 0) == 1
        assert half_binomial(F(1, 2), 2) == F(-1, 8)
        assert half_binomial(F(-1, 2), 1) == F(-1, 2)

    def test_rejects_other_arguments(self):
        with pytest.raises(ValueError):
            half_binomial(F(1, 3), 2)

    @given(k=st.integers(min_value=1, max_value=120))
    @settings(max_examples=30, deadline=None)
    def test_alternating_ratio_law(self, k):
        # c_k = (-1)^k C(1/2, k) satisfies c_k / c_(k-1) = (k - 3/2) / k
        ck = (-1) ** k * half_binomial(F(1, 2), k)
        ck1 = (-1) ** (k - 1) * half_binomial(F(1, 2), k - 1)
        assert ck / ck1 == F(2 * k - 3, 2 * k)

    @given(k=st.integers(min_value=0, max_value=80))
    @settings(max_examples=25, deadline=None)
    def test_reduced_form_invariant(self, k):
        v = half_binomial(F(-1, 2), k)
        assert math.gcd(abs(v.numerator), v.denominator) == 1
        assert v.denominator > 0


class TestPolyArithmetic:
    def test_trailing_zeros_trimmed(self):
        assert Poly([F(1), F(0), F(0)]).degree == 0
        assert Poly([]).is_zero and Poly([F(0)]).is_zero

    def test_divmod_roundtrip(self):
        a = Poly([F(1), F(2), F(0), F(3)])
        b = Poly([F(1), F(1)])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_mul_commutes_and_eval_homomorphism(self, xs, ys):
        p, q = Poly(xs), Poly(ys)
        assert p * q == q * p
        x = F(3, 7)
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)

    def test_derivative_product_rule(self):
        p = Poly([F(1), F(2), F(3)])
        q = Poly([F(-1), F(0), F(0), F(5)])
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


class TestPolyGcd:
    def test_contract_examples(self):
        assert poly_gcd(Poly([F(-1), F(0), F(1)]), Poly([F(-1), F(1)])) == Poly([F(-1), F(1)])
        assert poly_gcd(Poly([F(1), F(0), F(1)]), Poly([F(2), F(1)])) == Poly([F(1)])
        assert poly_gcd(Poly([F(6), F(3)]), Poly()) == Poly([F(2), F(1)])

    def test_gcd_of_zero_pair_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(Poly(), Poly())

    @given(small_roots, small_roots)
    @settings(max_examples=30, deadline=None)
    def test_common_factor_detected(self, r1, r2):
        common = Poly.from_roots(r1)
        g = poly_gcd(Poly.from_roots(r2) * common, common)
        # common divides the gcd
        assert (g % common.monic()).is_zero or g.degree >= common.degree

    def test_square_free_part(self):
        p = Poly.from_roots([F(1, 3), F(1, 3), F(2)])
        sf = square_free_part(p)
        assert sf == Poly.from_roots([F(1, 3), F(2)]).monic()


class TestSturmCount:
    def test_contract_examples(self):
        assert sturm_count(Poly([F(-1, 4), F(0), F(1)]), F(0), F(1), closed=True) == 1
        assert sturm_count(Poly([F(1), F(0), F(1)]), F(-2), F(2), closed=True) == 0
        double = Poly.from_roots([F(1, 3), F(1, 3)])
        assert sturm_count(double, F(0), F(1), closed=True) == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError, match="indeterminate"):
            sturm_count(Poly(), F(0), F(1))

    def test_endpoint_semantics(self):
        p = Poly.from_roots([F(0), F(1), F(1, 2)])
        assert sturm_count(p, F(0), F(1), closed=True) == 3
        assert sturm_count(p, F(0), F(1), closed=False) == 1

    @given(small_roots, st.data())
    @settings(max_examples=60, deadline=None)
    def test_matches_known_roots(self, roots, data):
        p = Poly.from_roots(roots)
        a = data.draw(st.fractions(min_value=-4, max_value=3, max_denominator=7))
        b = data.draw(st.fractions(min_value=-3, max_value=4, max_denominator=7))
        if a == b:
            b = a + 1
        a, b = min(a, b), max(a, b)
        expected = len({r for r in roots if a < r < b})
        expected_closed = len({r for r in roots if a <= r <= b})
        assert sturm_count(p, a, b, closed=False) == expected
        assert sturm_count(p, a, b, closed=True) == expected_closed

    @given(small_roots)
    @settings(max_examples=40, deadline=None)
    def test_multiplicity_counting(self, roots):
        p = Poly.from_roots(roots)
        lo, hi = F(-4), F(4)
        assert count_roots_with_multiplicity(p, lo, hi) == len(roots)

    def test_200_seeded_linear_factor_products(self):
        import random

        rng = random.Random(424242)
        for _ in range(200):
            roots = [
                F(rng.randint(-24, 24), rng.randint(1, 8))
                for _ in range(rng.randint(1, 6))
            ]
            a = F(rng.randint(-30, 10), rng.randint(1, 4))
            b = a + F(rng.randint(1, 40), rng.randint(1, 4))
            p = Poly.from_roots(roots)
            expect_open = len({r for r in roots if a < r < b})
            expect_closed = len({r for r in roots if a <= r <= b})
            assert sturm_count(p, a, b, closed=False) == expect_open
            assert sturm_count(p, a, b, closed=True) == expect_closed


class TestIsolation:
    def test_isolates_distinct_roots(self):
        roots = [F(-1, 2), F(1, 4), F(3, 4)]
        regions = isolate_real_roots(Poly.from_roots(roots), F(-1), F(1))
        assert len(regions) == 3
        for region, root in zip(regions, roots):
            assert region.lo < root < region.hi

    def test_excludes_endpoint_roots(self):
        p = Poly.from_roots([F(-1), F(0), F(1)])
        regions = isolate_real_roots(p, F(-1), F(1))
        assert len(regions) == 1
        assert regions[0].lo < 0 < regions[0].hi

    @given(st.lists(st.fractions(min_value=F(-9, 10), max_value=F(9, 10), max_denominator=16),
                    min_size=1, max_size=4, unique=True))
    @settings(max_examples=40, deadline=None)
    def test_each_region_contains_one_root(self, roots):
        p = Poly.from_roots(roots)
        regions = isolate_real_roots(p, F(-1), F(1))
        assert len(regions) == len(roots)
        for region in regions:
            inside = [r for r in roots if region.lo < r < region.hi]
            assert len(inside) == 1


class TestChebyshev:
    def test_contract_examples(self):
        assert cheb_from_cosines([F(1)]) == Poly([F(1)])
        assert cheb_from_cosines([F(0), F(0), F(1)]) == Poly([F(-1), F(0), F(2)])
        assert cheb_from_cosines([F(1), F(1, 2)]) == Poly([F(1), F(1, 2)])

    @given(st.lists(rationals, min_size=1, max_size=8))
    @settings(max_examples=16, deadline=None)
    def test_matches_cosine_sum_in_float(self, coeffs):
        q = cheb_from_cosines(coeffs)
        scale = sum(abs(float(c)) for c in coeffs) + 1.0
        for j in range(64):
            t = 2.0 * math.pi * j / 64 + 0.0137
            direct = sum(float(c) * math.cos(k * t) for k, c in enumerate(coeffs))
            assert abs(q(math.cos(t)) - direct) <= 1e-12 * scale

    @given(st.lists(rationals, min_size=1, max_size=8))
    @settings(max_examples=20, deadline=None)
    def test_real_imag_parts_reassemble_modulus(self, coeffs):
        p = Poly(coeffs)
        if p.is_zero:
            return
        r, s = circle_real_part(p), circle_imag_part(p)
        # R^2 + (1 - x^2) S^2 equals the squared circle modulus of p
        from segbounds.disk_zeros import circle_modulus_poly

        one_minus_x2 = Poly([F(1), F(0), F(-1)])
        assert r * r + one_minus_x2 * (s * s) == circle_modulus_poly(p)


class TestGaussianRational:
    def test_field_axioms_on_samples(self):
        a = GaussianRational(F(1, 2), F(-2, 3))
        b = GaussianRational(F(3), F(1, 5))
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert a * b == b * a

    def test_conjugate_and_modulus(self):
        a = GaussianRational(F(3, 5), F(4, 5))
        assert a.abs2() == 1
        assert (a * a.conjugate()).re == 1
        assert (a * a.conjugate()).im == 0

    def test_mixed_arithmetic_with_fractions(self):
        a = GaussianRational(F(1, 2), F(1, 2))
        assert F(1, 2) + a == GaussianRational(F(1), F(1, 2))
        assert 2 * a == GaussianRational(F(1), F(1))
        assert (F(1) / a).abs2() == 1 / a.abs2()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(F(1)) / GaussianRational(F(0))
