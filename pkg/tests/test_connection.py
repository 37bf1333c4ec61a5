"""Connection tables vs the triangular-elimination oracle."""

from fractions import Fraction

import pytest

from fibcheb import (
    Basis,
    Direction,
    Polynomial,
    chebyshev_t,
    expand,
    fibonacci_poly,
    lemma_recurrence_holds,
    oracle_expand,
)


def coefficients(j, direction):
    return {t.target_index: t.coefficient for t in expand(j, direction).terms}


class TestExpansions:
    def test_t2_in_fibonacci(self):
        assert coefficients(2, Direction.T_IN_F) == {3: 2, 1: -3}

    def test_u2_in_fibonacci(self):
        assert coefficients(2, Direction.U_IN_F) == {3: 4, 1: -5}

    def test_f4_in_first_kind(self):
        assert coefficients(3, Direction.F_IN_T) == {3: Fraction(1, 4), 1: Fraction(11, 4)}

    def test_f3_in_second_kind(self):
        assert coefficients(2, Direction.F_IN_U) == {2: Fraction(1, 4), 0: Fraction(5, 4)}

    def test_reconstruction_spot_checks(self):
        # 2(x^2+1) - 3 = 2x^2 - 1 and (1/4)(4x^3-3x) + (11/4)x = x^3 + 2x
        assert expand(2, Direction.T_IN_F).reconstruct() == chebyshev_t(2)
        assert expand(3, Direction.F_IN_T).reconstruct() == fibonacci_poly(4)
        assert expand(3, Direction.F_IN_U).reconstruct() == fibonacci_poly(4)

    def test_rejects_zero_index_for_chebyshev_sources(self):
        with pytest.raises(ValueError):
            expand(0, Direction.T_IN_F)
        with pytest.raises(ValueError):
            expand(0, Direction.U_IN_F)

    def test_fibonacci_sources_allow_zero(self):
        assert expand(0, Direction.F_IN_T).reconstruct() == Polynomial((1,))
        assert expand(0, Direction.F_IN_U).reconstruct() == Polynomial((1,))


class TestOracleExpand:
    def test_monomial_in_first_kind(self):
        terms = dict(oracle_expand(Polynomial((1, 0, 1)), Basis.CHEBYSHEV_T))
        assert terms == {2: Fraction(1, 2), 1: 0, 0: Fraction(3, 2)}

    def test_basis_element_maps_to_itself(self):
        terms = dict(oracle_expand(chebyshev_t(2), Basis.CHEBYSHEV_T))
        assert terms == {2: 1, 1: 0, 0: 0}

    def test_fibonacci_basis(self):
        terms = dict(oracle_expand(Polynomial((0, 2, 0, 1)), Basis.FIBONACCI))
        assert terms == {4: 1, 3: 0, 2: 0, 1: 0}

    def test_linearity_round_trip(self):
        p = Polynomial((Fraction(1, 3), -2, 0, 5, Fraction(7, 2)))
        for basis in Basis:
            total = Polynomial.zero()
            for index, c in oracle_expand(p, basis):
                degree = index - 1 if basis is Basis.FIBONACCI else index
                from fibcheb.sequences import basis_element_of_degree

                total = total + basis_element_of_degree(basis, degree) * c
            assert total == p


class TestTheoremsAgainstOracle:
    def test_round_trip_and_oracle_match(self):
        # full j <= 60 sweep lives in the acceptance suite; spot-check a band here
        for direction in Direction:
            for j in range(direction.min_index, 26):
                expansion = expand(j, direction)
                source = expansion.source_polynomial()
                assert expansion.reconstruct() == source
                oracle = dict(oracle_expand(source, direction.target_basis))
                generated = expansion.coefficients_by_index()
                for idx in set(oracle) | set(generated):
                    assert oracle.get(idx, Fraction(0)) == generated.get(idx, Fraction(0)), (
                        direction,
                        j,
                        idx,
                    )

    def test_inversion_t_route(self):
        # expanding F in T and every T back in F must reproduce exactly F
        for j in range(41):
            accumulated: dict[int, Fraction] = {}
            for t in expand(j, Direction.F_IN_T).terms:
                if t.target_index == 0:
                    # T_0 = 1 = F_1 directly; the closed form starts at index 1
                    accumulated[1] = accumulated.get(1, Fraction(0)) + t.coefficient
                    continue
                for s in expand(t.target_index, Direction.T_IN_F).terms:
                    key = s.target_index
                    accumulated[key] = accumulated.get(key, Fraction(0)) + t.coefficient * s.coefficient
            nonzero = {k: v for k, v in accumulated.items() if v != 0}
            assert nonzero == {j + 1: Fraction(1)}

    def test_inversion_u_route(self):
        for j in range(41):
            accumulated: dict[int, Fraction] = {}
            for t in expand(j, Direction.F_IN_U).terms:
                if t.target_index == 0:
                    accumulated[1] = accumulated.get(1, Fraction(0)) + t.coefficient
                    continue
                for s in expand(t.target_index, Direction.U_IN_F).terms:
                    key = s.target_index
                    accumulated[key] = accumulated.get(key, Fraction(0)) + t.coefficient * s.coefficient
            nonzero = {k: v for k, v in accumulated.items() if v != 0}
            assert nonzero == {j + 1: Fraction(1)}

    def test_fibonacci_expansion_coefficients_positive(self):
        for j in range(61):
            for direction in (Direction.F_IN_T, Direction.F_IN_U):
                assert all(t.coefficient > 0 for t in expand(j, direction).terms), (j, direction)


class TestLemmaRecurrence:
    def test_examples(self):
        assert lemma_recurrence_holds(4, 1)
        assert lemma_recurrence_holds(6, 2)

    def test_trivial_column(self):
        assert all(lemma_recurrence_holds(j, 0) for j in range(2, 20))

    def test_full_range(self):
        for j in range(2, 41):
            for m in range(1, j // 2 + 1):
                assert lemma_recurrence_holds(j, m), (j, m)
