"""Coefficient family tests: generators, sign structure, partial sums."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segbounds.coefficients import (
    CoeffTable,
    check_induction_step,
    check_sign_pattern,
    sqrt_coeffs_oracle,
    sqrt_coeffs_recurrence,
    sqrt_one_minus_z_coeffs,
    sqrt_section,
    squared_sum,
    taylor_at_one,
    taylor_at_one_exceeds_sqrt3_third,
    triple_index_partial,
)
from segbounds.exact import Poly, half_binomial

KNOWN_SERIES = (F(1), F(1, 2), F(3, 8), F(-3, 16), F(3, 128), F(15, 256))


class TestGenerators:
    def test_known_opening_values(self):
        assert sqrt_coeffs_recurrence(2, 5).values == KNOWN_SERIES
        assert sqrt_coeffs_oracle(2, 2).values == KNOWN_SERIES[:3]

    def test_next_value_after_known_run(self):
        assert sqrt_coeffs_recurrence(2, 6)[6] == F(-57, 1024)

    def test_gap_one_matches_binomials(self):
        table = sqrt_coeffs_recurrence(1, 4)
        for k in range(5):
            assert table[k] == half_binomial(F(1, 2), k)

    def test_oracle_base_cases(self):
        assert sqrt_coeffs_oracle(3, 1).values == (F(1), F(1, 2))
        assert sqrt_coeffs_oracle(2, 0).values == (F(1),)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            sqrt_coeffs_recurrence(0, 5)
        with pytest.raises(ValueError):
            sqrt_coeffs_oracle(2, -1)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
    def test_routes_agree(self, d):
        assert sqrt_coeffs_recurrence(d, 160).values == sqrt_coeffs_oracle(d, 160).values

    @pytest.mark.parametrize("d", [1, 2, 3, 5])
    def test_squaring_identity(self, d):
        # truncated square of the section reproduces 1 + z + ... + z^min(d,N)
        N = 24
        section = Poly(sqrt_coeffs_recurrence(d, N).values)
        squared = (section * section).coeffs[: N + 1]
        expected = [F(1) if k <= d else F(0) for k in range(N + 1)]
        assert list(squared) == expected

    def test_table_validates_leading_one(self):
        with pytest.raises(ValueError):
            CoeffTable(2, 1, (F(2), F(1)), "recurrence")


class TestSignStructure:
    def test_pattern_on_known_run(self):
        assert check_sign_pattern(sqrt_coeffs_recurrence(2, 5)).conforms
        assert check_sign_pattern(sqrt_coeffs_recurrence(2, 0)).conforms

    def test_pattern_longer_run(self):
        assert check_sign_pattern(sqrt_coeffs_recurrence(2, 1000)).conforms

    def test_rejects_other_d(self):
        with pytest.raises(ValueError, match="d = 2"):
            check_sign_pattern(sqrt_coeffs_recurrence(3, 10))

    def test_report_only_mode(self):
        verdict = check_sign_pattern(sqrt_coeffs_recurrence(3, 30), report_only=True)
        assert not verdict.conforms  # gap-3 coefficients break the mod-3 pattern
        assert verdict.first_violation is not None

    def test_detects_planted_violation(self):
        bad = CoeffTable(2, 3, (F(1), F(1, 2), F(3, 8), F(3, 16)), "recurrence")
        verdict = check_sign_pattern(bad)
        assert not verdict.conforms and verdict.first_violation == 3

    def test_induction_step_claim(self):
        assert check_induction_step(sqrt_coeffs_recurrence(2, 500)).conforms


class TestPartialSums:
    def test_taylor_at_one_values(self):
        assert taylor_at_one(2, 0) == 1
        assert taylor_at_one(2, 2) == F(15, 8)
        assert taylor_at_one(2, 3) == F(27, 16)
        assert (F(27, 16)) ** 2 > F(1, 3)

    def test_sqrt3_third_bound(self):
        assert all(taylor_at_one_exceeds_sqrt3_third(n) for n in range(300))

    def test_squared_sums(self):
        assert squared_sum(2, 0) == 1
        assert squared_sum(2, 2) == F(89, 64)

    def test_squared_sum_matches_direct(self):
        values = sqrt_coeffs_recurrence(2, 50).values
        direct = sum((v * v for v in values), F(0))
        assert squared_sum(2, 50) == direct

    def test_triple_index_partials(self):
        assert triple_index_partial(0) == 1
        assert triple_index_partial(1) == F(13, 16)

    def test_triple_index_decreasing_and_above_third(self):
        previous = None
        for N in range(60):
            v = triple_index_partial(N)
            assert v * v > F(1, 3)
            if previous is not None:
                assert v < previous
            previous = v

    def test_triple_index_converges_to_sqrt3_third(self):
        # tail decays like N^(-1/2); the gap first drops below 0.01 near N=800
        import math

        target = math.sqrt(3) / 3
        gap_50 = float(triple_index_partial(50)) - target
        gap_800 = float(triple_index_partial(800)) - target
        assert 0 < gap_800 < 0.01 < gap_50 < 0.05

    @given(n=st.integers(min_value=1, max_value=400))
    @settings(max_examples=30, deadline=None)
    def test_prefix_consistency(self, n):
        assert taylor_at_one(2, n) - taylor_at_one(2, n - 1) == sqrt_coeffs_recurrence(2, n)[n]


class TestHelperCoefficients:
    def test_opening_values(self):
        assert sqrt_one_minus_z_coeffs(3).values == (F(1), F(-1, 2), F(-1, 8), F(-1, 16))

    def test_ratio_law(self):
        c = sqrt_one_minus_z_coeffs(40).values
        assert c[2] / c[1] == F(1, 4)
        for k in range(1, 41):
            assert c[k] == c[k - 1] * F(2 * k - 3, 2 * k)

    def test_all_negative_past_zero(self):
        c = sqrt_one_minus_z_coeffs(200).values
        assert c[0] == 1
        assert all(v < 0 for v in c[1:])

    def test_matches_alternating_binomial(self):
        c = sqrt_one_minus_z_coeffs(25).values
        for k in range(26):
            assert c[k] == (-1) ** k * half_binomial(F(1, 2), k)


def test_section_polynomial():
    section = sqrt_section(2, 3)
    assert section == Poly([F(1), F(1, 2), F(3, 8), F(-3, 16)])
    assert section(F(1)) == taylor_at_one(2, 3)
