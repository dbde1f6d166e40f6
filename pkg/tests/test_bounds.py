"""Bound families: exact values, monotonicity, limits, Parseval consistency."""

import math
from fractions import Fraction as F

import pytest

from segbounds.bounds import (
    GENERAL_D,
    LANDAU,
    SZASZ_PAIR,
    TRINOMIAL,
    bound_report,
    four_over_pi,
    landau_bound,
    segment_limit,
    segment_limit_closed_form,
    szasz_pair_bound,
    trinomial_bound,
    trinomial_limit,
)
from segbounds.coefficients import squared_sum


class TestExactValues:
    def test_base_cases(self):
        assert landau_bound(0) == 1
        assert szasz_pair_bound(0) == 1
        assert trinomial_bound(0) == 1

    def test_n_two_values(self):
        assert landau_bound(2) == F(89, 64)
        assert szasz_pair_bound(2) == F(81, 64)
        assert trinomial_bound(2) == F(89, 64)

    def test_landau_and_trinomial_coincide_only_early(self):
        # the squared magnitudes agree for k <= 2, then diverge
        assert landau_bound(2) == trinomial_bound(2)
        assert landau_bound(3) != trinomial_bound(3)

    def test_landau_matches_direct_binomials(self):
        from segbounds.exact import half_binomial

        direct = sum((half_binomial(F(-1, 2), k) ** 2 for k in range(11)), F(0))
        assert landau_bound(10) == direct

    def test_szasz_matches_direct_binomials(self):
        from segbounds.exact import half_binomial

        direct = sum((half_binomial(F(1, 2), k) ** 2 for k in range(11)), F(0))
        assert szasz_pair_bound(10) == direct


class TestMonotonicityAndLimits:
    def test_all_three_families_strictly_increase(self):
        for fn in (landau_bound, szasz_pair_bound, trinomial_bound):
            prev = fn(0)
            for n in range(1, 2001):
                cur = fn(n)
                assert cur > prev
                prev = cur

    def test_landau_grows_without_settling(self):
        assert landau_bound(1000) > landau_bound(100) + F(1, 10)

    def test_szasz_pair_approaches_four_over_pi(self):
        assert abs(float(szasz_pair_bound(1000)) - four_over_pi()) < 1e-6
        assert float(szasz_pair_bound(1000)) < four_over_pi()

    def test_trinomial_stays_strictly_below_limit(self):
        lim = trinomial_limit()
        for n in (0, 10, 100, 500):
            assert float(trinomial_bound(n)) < lim - 1e-12

    def test_limit_constants_from_closed_forms(self):
        assert four_over_pi() == 4.0 / math.pi
        assert trinomial_limit() == 1.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi
        assert abs(trinomial_limit() - 1.436) < 1e-3


class TestSegmentLimit:
    def test_known_closed_forms(self):
        assert abs(segment_limit(1) - four_over_pi()) <= 1e-9
        assert abs(segment_limit(2) - trinomial_limit()) <= 1e-9

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_quadrature_matches_antiderivative_route(self, d):
        assert abs(segment_limit(d) - segment_limit_closed_form(d)) <= 1e-9

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_parseval_consistency(self, d):
        # partial sums of squared coefficients approach the circle mean
        assert abs(float(squared_sum(d, 2000)) - segment_limit(d)) <= 1e-4

    def test_rejects_bad_d(self):
        with pytest.raises(ValueError):
            segment_limit(0)


class TestBoundReport:
    def test_trinomial_row(self):
        rep = bound_report(TRINOMIAL, 2)
        assert rep.exact_value == F(89, 64)
        assert rep.float_value == 1.390625
        assert rep.gap_to_limit > 0

    def test_landau_has_no_limit(self):
        rep = bound_report(LANDAU, 5)
        assert rep.limit is None and rep.gap_to_limit is None

    def test_general_d_uses_quadrature_limit(self):
        rep = bound_report(GENERAL_D, 50, d=3)
        assert rep.limit == pytest.approx(segment_limit(3), abs=1e-12)
        assert rep.gap_to_limit > 0

    def test_szasz_family(self):
        rep = bound_report(SZASZ_PAIR, 0)
        assert rep.exact_value == 1 and rep.limit == four_over_pi()

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            bound_report("nonsense", 1)
