"""Product-series sign claims, the quotient polynomial, and root localization."""

from fractions import Fraction as F

import pytest

from segbounds.coefficients import (
    sqrt_coeffs_recurrence,
    sqrt_one_minus_z_coeffs,
    taylor_at_one,
)
from segbounds.exact import Poly, falling_factorial
from segbounds.product_analysis import (
    check_coeff_ratio_identity,
    check_product_signs,
    check_root_localization,
    product_coeffs,
    product_sum_check,
    quotient_poly,
    scan_product_signs,
)


class TestProductCoeffs:
    def test_constant_term_is_one(self):
        for n in (0, 1, 4, 9):
            assert product_coeffs(n, n + 3)[0] == 1

    def test_small_index_pattern(self):
        table = product_coeffs(5, 8)
        assert table[1] == 0 and table[2] == 0
        assert table[3] == F(-1, 2)  # first sqrt(1-z^3)-style term

    def test_gap_zero_section_reduces_to_helper(self):
        table = product_coeffs(0, 8)
        helper = sqrt_one_minus_z_coeffs(8)
        assert table.values == helper.values

    def test_beyond_section_identity_multiple_of_three(self):
        # for section degree divisible by 3, the next coefficient is minus the
        # next section coefficient
        for n in (3, 6, 9, 12):
            table = product_coeffs(n, n + 1)
            b = sqrt_coeffs_recurrence(2, n + 1)
            assert table[n + 1] == -b[n + 1] < 0

    def test_convolution_against_direct_polynomial_product(self):
        n, M = 7, 23
        table = product_coeffs(n, M)
        section = Poly(sqrt_coeffs_recurrence(2, n).values)
        helper = Poly(sqrt_one_minus_z_coeffs(M).values)
        direct = (section * helper).coeffs[: M + 1]
        assert list(table.values) == list(direct)

    def test_requires_truncation_past_section(self):
        with pytest.raises(ValueError):
            product_coeffs(5, 5)


class TestSignClaims:
    def test_single_degree(self):
        verdict = check_product_signs(5, 16)
        assert verdict.ok

    def test_scan_matches_single_calls(self):
        scanned = scan_product_signs(12)
        for n, verdict in enumerate(scanned):
            single = check_product_signs(n, 3 * n + 16)
            assert verdict.ok == single.ok
            assert verdict.M == single.M

    def test_scan_range(self):
        assert all(v.ok for v in scan_product_signs(80))

    def test_partial_sum_bracket(self):
        for n, M in ((0, 8), (3, 20), (10, 46)):
            partial, bound = product_sum_check(n, M)
            assert 0 < partial <= bound

    def test_partial_sum_shrinks_with_truncation(self):
        p1, _ = product_sum_check(6, 30)
        p2, _ = product_sum_check(6, 90)
        assert p2 < p1


class TestQuotientPoly:
    def test_degenerate_constant(self):
        assert quotient_poly(0).poly == Poly([F(1)])

    def test_leading_coefficient_is_section_value_at_one(self):
        for n in (1, 2, 5, 11, 30):
            qp = quotient_poly(n)
            assert qp.poly.degree == n
            assert qp.poly.leading == taylor_at_one(2, n)

    def test_known_half_integer_value(self):
        assert quotient_poly(3).poly(F(7, 2)) == F(-315, 128)

    def test_degree_and_leading_full_range(self):
        # the construction telescopes correctly all the way to degree 200
        for n in range(0, 201):
            qp = quotient_poly(n)
            assert qp.poly.degree == n
            assert qp.poly.leading == taylor_at_one(2, n)

    def test_half_integer_collapse_identity(self):
        # only the top term of the defining sum survives at x = n + 1/2
        for n in range(1, 16):
            p = quotient_poly(n).poly
            bn = sqrt_coeffs_recurrence(2, n)[n]
            assert p(F(2 * n + 1, 2)) == bn * falling_factorial(F(2 * n + 1, 2), n)

    def test_vanishes_at_non_multiples_of_three(self):
        p = quotient_poly(8).poly
        for k in (1, 2, 4, 5, 7, 8):
            assert p(F(k)) == 0
        for k in (3, 6):
            assert p(F(k)) != 0


class TestRatioIdentity:
    def test_contract_examples(self):
        assert check_coeff_ratio_identity(2, 10).ok
        assert check_coeff_ratio_identity(0, 5).ok

    def test_both_sides_negative_sample(self):
        n, k = 4, 3
        table = product_coeffs(n, n + 1)
        p = quotient_poly(n).poly
        c = sqrt_one_minus_z_coeffs(k).values
        left = table[k] * falling_factorial(F(2 * k - 3, 2), n)
        right = p(F(k)) * c[k]
        assert left == right < 0

    def test_sweep(self):
        for n in range(0, 26):
            assert check_coeff_ratio_identity(n, 3 * n if n else 2).ok

    def test_requires_k_at_least_n(self):
        with pytest.raises(ValueError):
            check_coeff_ratio_identity(5, 4)


class TestRootLocalization:
    def test_small_cases(self):
        v2 = check_root_localization(2)
        assert v2.ok and v2.count_with_multiplicity == 2
        v3 = check_root_localization(3)
        assert v3.ok and v3.count_with_multiplicity == 3

    def test_sign_pattern_at_multiples_of_three(self):
        v6 = check_root_localization(6)
        assert v6.sign_pattern_ok and v6.ok

    def test_integer_roots_simple(self):
        for n in (2, 5, 9, 14):
            v = check_root_localization(n)
            assert v.integer_roots_ok and v.integer_roots_simple

    def test_multiplicity_evidence_reported(self):
        assert check_root_localization(10).gcd_degree == 0

    def test_sweep_medium(self):
        for n in range(1, 31):
            assert check_root_localization(n).ok, n

    def test_rejects_n_zero(self):
        with pytest.raises(ValueError):
            check_root_localization(0)
