"""Identity verifiers: statuses, residuals, and erratum bookkeeping."""

import math
from fractions import Fraction

import pytest

from fibcheb import (
    Status,
    fibonacci_number,
    sqrt_pi_over_gamma,
    verify_2f1_chain,
    verify_complex_identities,
    verify_cor_sum_T,
    verify_cor_sum_U,
    verify_derivative_corollaries,
    verify_fib_2f1_representations,
    verify_fib_expressions,
    verify_laurent_identity,
    verify_trig_identity,
)


class TestWeightedSumFirstKind:
    def test_passes_at_one(self):
        report = verify_cor_sum_T(1)
        assert report.status is Status.PASS
        assert report.printed_residual == 0

    def test_erratum_at_two(self):
        # verbatim sum is 1/2; multiplying by the dropped parent factor j fixes it
        report = verify_cor_sum_T(2)
        assert report.status is Status.PAPER_ERRATUM
        assert report.printed_residual == Fraction(-1, 2)
        assert report.corrected_residual == 0

    def test_corrected_form_exact_through_sixty(self):
        for j in range(1, 61):
            report = verify_cor_sum_T(j)
            assert report.corrected_residual == 0
            assert report.status in (Status.PASS, Status.PAPER_ERRATUM)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            verify_cor_sum_T(0)


class TestWeightedSumSecondKind:
    def test_small_values(self):
        assert verify_cor_sum_U(1).lhs == 2
        assert verify_cor_sum_U(2).lhs == 3

    def test_exact_through_sixty(self):
        for j in range(1, 61):
            report = verify_cor_sum_U(j)
            assert report.status is Status.PASS, j

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            verify_cor_sum_U(0)


class TestFibonacciExpressions:
    def test_base_case(self):
        report = verify_fib_expressions(0)
        assert report.status is Status.PASS
        assert report.checks[0].rhs == 1

    def test_hand_expanded_values(self):
        # j=3 first kind: 1/4 + 11/4 = 3; j=2 second kind: (3 + 5)/4 = 2
        report = verify_fib_expressions(3)
        assert report.checks[0].lhs == 3
        report = verify_fib_expressions(2)
        assert report.checks[1].lhs == 2

    def test_exact_through_sixty(self):
        for j in range(61):
            assert verify_fib_expressions(j).status is Status.PASS, j


class TestChain:
    def test_all_members_equal_fibonacci_value(self):
        for j in (1, 2, 5):
            report = verify_2f1_chain(j)
            expected = fibonacci_number(j + 1)
            assert all(c.lhs == expected for c in report.checks), j

    def test_tail_prefactor_erratum(self):
        # printed 4/5-member equals F_{j+1}; the stated head needs prefactor 1/(j+1)
        report = verify_2f1_chain(2)
        assert report.status is Status.PAPER_ERRATUM
        assert report.printed_residual == 2 - Fraction(8, 3)
        assert report.corrected_residual == 0

    def test_passes_where_prefactors_coincide(self):
        assert verify_2f1_chain(0).status is Status.PASS
        assert verify_2f1_chain(1).status is Status.PASS

    def test_members_exact_through_sixty(self):
        for j in range(61):
            report = verify_2f1_chain(j)
            assert all(c.ok for c in report.checks), j
            assert report.corrected_residual == 0, j


class TestComplexIdentities:
    def test_named_values(self):
        # U_2(i/2) = -2 so F_3 = -2 / i^2 = 2; U_1(-2i) = -4i = (-i/2) F_6
        report = verify_complex_identities(2)
        assert report.status is Status.PASS
        report = verify_complex_identities(1)
        eq2 = next(c for c in report.checks if c.name == "eq-complex-2")
        assert eq2.lhs.to_text() == "0-4*i"

    def test_base_case(self):
        assert verify_complex_identities(0).status is Status.PASS

    def test_exact_through_forty(self):
        for n in range(41):
            assert verify_complex_identities(n).status is Status.PASS, n


class TestLaurentIdentity:
    def test_hand_computed_point(self):
        # F_3(5/4) = 41/16 split as 17/16 + 24/16
        report = verify_laurent_identity(2, Fraction(2))
        assert report.status is Status.PASS
        assert report.lhs == Fraction(41, 16)

    def test_trivial_cases(self):
        assert verify_laurent_identity(0, Fraction(7, 5)).status is Status.PASS
        report = verify_laurent_identity(3, Fraction(1))
        assert report.status is Status.PASS
        assert report.lhs == 3  # F_4(1)

    def test_sweep(self):
        points = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(7, 5))
        for j in range(41):
            for x0 in points:
                assert verify_laurent_identity(j, x0).status is Status.PASS, (j, x0)

    def test_rejects_zero_point(self):
        with pytest.raises(ValueError):
            verify_laurent_identity(2, Fraction(0))


class TestTrigIdentity:
    def test_angle_zero_reduces_to_endpoint(self):
        assert verify_trig_identity(2, 0.0) < 1e-12

    def test_sample_angle(self):
        assert verify_trig_identity(4, math.pi / 3) < 1e-12

    def test_constant_case(self):
        assert verify_trig_identity(0, 1.2345) == 0.0

    def test_sixteen_sample_sweep(self):
        thetas = [math.pi * (t + 1) / 16 for t in range(16)]
        for j in range(31):
            worst = max(verify_trig_identity(j, theta) for theta in thetas)
            assert worst < 1e-9, j


class TestDerivativeCorollaries:
    def test_first_order_values(self):
        # prefactor 1/12 and sum 24 reproduce F'_3(1) = 2 in the second-kind form
        prefactor = sqrt_pi_over_gamma(1, Fraction(3, 2)) / 2**4
        assert prefactor == Fraction(1, 12)
        report = verify_derivative_corollaries(2, 1)
        assert report.status is Status.PASS
        deriv_u = next(c for c in report.checks if c.name == "deriv-U-corrected")
        assert deriv_u.lhs == 2
        assert deriv_u.lhs / prefactor == 24

    def test_all_four_formulas_at_one_one(self):
        # F_2 = x so every first-derivative quantity is 1
        report = verify_derivative_corollaries(1, 1)
        assert report.status is Status.PASS
        for name in ("sum-T", "sum-U", "deriv-T", "deriv-U-corrected"):
            check = next(c for c in report.checks if c.name == name)
            assert check.lhs == 1, name

    def test_second_kind_form_erratum_at_higher_order(self):
        report = verify_derivative_corollaries(2, 2)
        assert report.status is Status.PAPER_ERRATUM
        assert report.printed_residual == -4  # printed -2 vs oracle 2
        assert report.corrected_residual == 0

    def test_sweep_small(self):
        for j in range(16):
            for q in range(1, 6):
                report = verify_derivative_corollaries(j, q)
                assert report.status in (Status.PASS, Status.PAPER_ERRATUM), (j, q)
                assert all(c.ok for c in report.checks), (j, q)

    def test_rejects_order_zero(self):
        with pytest.raises(ValueError):
            verify_derivative_corollaries(3, 0)


def test_fib_2f1_representation_reports():
    for n in range(1, 30):
        assert verify_fib_2f1_representations(n).status is Status.PASS
