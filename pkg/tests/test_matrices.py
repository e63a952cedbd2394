"""Permutations, matrix assembly, traces, determinants, char polynomial."""

import math
import random
from fractions import Fraction

import pytest

from ouropoly import (
    Permutation,
    PolyMatrix,
    Polynomial,
    VarSpace,
    build_matrix,
    char_poly,
    degree_of_trace,
    determinant_cofactor,
    determinant_leibniz,
    gen_p,
    permutations,
    trace_degree_formula,
    trace_product,
    trace_sum,
)

VS1 = VarSpace(1)
VS2 = VarSpace(2)
VS3 = VarSpace(3)


def c(vs, i):
    return Polynomial.variable(vs, i)


def random_polynomial(rng, vs, max_terms=3, max_exp=2):
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = rng.randint(-5, 5)
        mono = tuple(rng.randint(0, max_exp) for _ in range(vs.nvars))
        pairs.append((coeff, mono))
    return Polynomial(vs, pairs)


def random_matrix(rng, n):
    vs = VarSpace(n)
    entries = [random_polynomial(rng, vs) for _ in range(n * n)]
    return PolyMatrix(n, n, entries)


class TestPermutations:
    def test_singleton(self):
        perms = list(permutations(1))
        assert [p.mapping for p in perms] == [(1,)]
        assert perms[0].inversions == 0

    def test_two_elements(self):
        perms = list(permutations(2))
        assert [(p.mapping, p.inversions) for p in perms] == [
            ((1, 2), 0),
            ((2, 1), 1),
        ]

    def test_three_elements_lex_order(self):
        perms = list(permutations(3))
        assert len(perms) == 6
        assert [p.mapping for p in perms] == sorted(p.mapping for p in perms)
        by_mapping = {p.mapping: p for p in perms}
        assert by_mapping[(3, 1, 2)].inversions == 2

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts_and_distinctness(self, n):
        seen = {p.mapping for p in permutations(n)}
        assert len(seen) == math.factorial(n)

    def test_inversion_definition(self):
        sigma = Permutation((2, 4, 1, 3))
        # pairs (a,b), a<b, sigma(a)>sigma(b): (2,1),(4,1),(4,3)
        assert sigma.inversions == 3

    def test_rejects_non_bijections(self):
        with pytest.raises(ValueError):
            Permutation((1, 1))
        with pytest.raises(ValueError):
            Permutation((0, 1))
        with pytest.raises(ValueError):
            Permutation(())

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            permutations(0)


class TestSign:
    def test_identity_is_even(self):
        assert Permutation((1, 2, 3)).sign == 1

    def test_transposition_is_odd(self):
        assert Permutation((2, 1)).sign == -1

    def test_three_cycle_is_even(self):
        assert Permutation((3, 1, 2)).sign == 1

    def test_compose_applies_right_then_left(self):
        sigma = Permutation((2, 3, 1))
        tau = Permutation((1, 3, 2))
        composed = sigma.compose(tau)
        assert composed.mapping == tuple(sigma(tau(i)) for i in (1, 2, 3))

    def test_sign_is_multiplicative(self):
        rng = random.Random(97)
        for _ in range(100):
            n = rng.randint(1, 6)
            first = list(range(1, n + 1))
            second = list(range(1, n + 1))
            rng.shuffle(first)
            rng.shuffle(second)
            sigma = Permutation(tuple(first))
            tau = Permutation(tuple(second))
            assert sigma.compose(tau).sign == sigma.sign * tau.sign


class TestBuildMatrix:
    def test_one_by_one(self):
        M = build_matrix(1, 1)
        assert (M.rows, M.cols) == (1, 1)
        assert M.entry(1, 1) == c(VS1, 1) ** 2 - c(VS1, 1)

    def test_two_by_two_top_left(self):
        M = build_matrix(2, 2)
        expected = c(VS2, 1) ** 2 + c(VS2, 1) * c(VS2, 2) - c(VS2, 1)
        assert M.entry(1, 1) == expected

    def test_rectangular_shape_and_entry(self):
        M = build_matrix(2, 3)
        assert (M.rows, M.cols) == (2, 3)
        assert not M.is_square
        assert M.entry(2, 2) == gen_p(2, 2, 2)

    def test_every_entry_matches_generator(self):
        M = build_matrix(3, 4)
        for k in range(1, 4):
            for j in range(1, 5):
                assert M.entry(k, j) == gen_p(3, k, j)

    def test_rejects_nonpositive_shape(self):
        with pytest.raises(ValueError):
            build_matrix(0, 2)
        with pytest.raises(ValueError):
            build_matrix(2, 0)

    def test_entry_indices_are_checked(self):
        M = build_matrix(2, 2)
        with pytest.raises(ValueError):
            M.entry(0, 1)
        with pytest.raises(ValueError):
            M.entry(1, 3)

    def test_entries_must_share_varspace(self):
        with pytest.raises(ValueError):
            PolyMatrix(1, 2, [c(VS1, 1), c(VS2, 1)])

    def test_entry_count_must_match_shape(self):
        with pytest.raises(ValueError):
            PolyMatrix(2, 2, [c(VS2, 1)] * 3)

    def test_from_rows_rejects_ragged_input(self):
        with pytest.raises(ValueError):
            PolyMatrix.from_rows([[c(VS2, 1), c(VS2, 2)], [c(VS2, 1)]])


class TestTraces:
    def test_product_trace_n1(self):
        assert trace_product(build_matrix(1, 1)) == c(VS1, 1) ** 2 - c(VS1, 1)

    def test_product_trace_n2_is_expanded_product(self):
        M = build_matrix(2, 2)
        assert trace_product(M) == gen_p(2, 1, 1) * gen_p(2, 2, 2)

    def test_product_trace_degree_n2(self):
        assert trace_product(build_matrix(2, 2)).total_degree() == 5

    def test_sum_trace_n1(self):
        assert trace_sum(build_matrix(1, 1)) == c(VS1, 1) ** 2 - c(VS1, 1)

    def test_sum_trace_n2(self):
        M = build_matrix(2, 2)
        assert trace_sum(M) == gen_p(2, 1, 1) + gen_p(2, 2, 2)

    def test_sum_trace_of_zero_matrix(self):
        zero = Polynomial.zero(VS2)
        M = PolyMatrix(2, 2, [zero] * 4)
        assert trace_sum(M).is_zero

    def test_non_square_rejected(self):
        M = build_matrix(2, 3)
        with pytest.raises(ValueError):
            trace_product(M)
        with pytest.raises(ValueError):
            trace_sum(M)


class TestTraceDegree:
    def test_formula_values(self):
        assert trace_degree_formula(1) == 2
        assert trace_degree_formula(8) == 44
        assert trace_degree_formula(100) == 5150

    def test_formula_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            trace_degree_formula(0)

    def test_degree_of_trace_small(self):
        assert degree_of_trace(build_matrix(1, 1)) == 2
        assert degree_of_trace(build_matrix(3, 3)) == 9
        assert degree_of_trace(build_matrix(5, 5)) == 20

    def test_degree_of_trace_matches_formula(self):
        for n in range(1, 7):
            assert degree_of_trace(build_matrix(n, n)) == trace_degree_formula(n)

    def test_degree_of_trace_matches_full_expansion(self):
        for n in range(1, 4):
            M = build_matrix(n, n)
            assert trace_product(M).total_degree() == degree_of_trace(M)

    def test_zero_diagonal_entry_rejected(self):
        zero = Polynomial.zero(VS2)
        M = PolyMatrix(2, 2, [c(VS2, 1), c(VS2, 2), c(VS2, 1), zero])
        with pytest.raises(ValueError):
            degree_of_trace(M)


class TestDeterminants:
    def test_n1(self):
        M = build_matrix(1, 1)
        assert determinant_leibniz(M) == c(VS1, 1) ** 2 - c(VS1, 1)
        assert determinant_cofactor(M) == M.entry(1, 1)

    def test_n2_signed_permutation_sum(self):
        M = build_matrix(2, 2)
        expected = (
            M.entry(1, 1) * M.entry(2, 2) - M.entry(2, 1) * M.entry(1, 2)
        )
        assert determinant_leibniz(M) == expected
        assert determinant_cofactor(M) == expected

    @pytest.mark.parametrize("n", range(1, 5))
    def test_leibniz_equals_cofactor_on_generator_matrices(self, n):
        M = build_matrix(n, n)
        assert determinant_leibniz(M) == determinant_cofactor(M)

    def test_leibniz_equals_cofactor_on_random_matrices(self):
        rng = random.Random(1729)
        for _ in range(20):
            M = random_matrix(rng, rng.randint(1, 4))
            assert determinant_leibniz(M) == determinant_cofactor(M)

    def test_row_swap_negates_determinant(self):
        rng = random.Random(31)
        for _ in range(5):
            M = random_matrix(rng, 3)
            swapped = PolyMatrix.from_rows([M.row(2), M.row(1), M.row(3)])
            assert determinant_leibniz(swapped) == -determinant_leibniz(M)

    def test_non_square_rejected(self):
        M = build_matrix(2, 3)
        with pytest.raises(ValueError):
            determinant_leibniz(M)
        with pytest.raises(ValueError):
            determinant_cofactor(M)


class TestCharPoly:
    def test_n1_explicit(self):
        vs = VarSpace(1, lambda_adjoined=True)
        expected = (
            Polynomial.variable(vs, 1) ** 2
            - Polynomial.variable(vs, 1)
            - Polynomial.lambda_var(vs)
        )
        assert char_poly(build_matrix(1, 1)) == expected

    @pytest.mark.parametrize("n", range(1, 4))
    def test_lambda_degree_is_n(self, n):
        p = char_poly(build_matrix(n, n))
        assert p.degree_in(p.varspace.lambda_index) == n

    @pytest.mark.parametrize("n", range(1, 5))
    def test_lambda_zero_recovers_determinant(self, n):
        M = build_matrix(n, n)
        p = char_poly(M)
        vs = p.varspace
        at_zero = p.substitute(vs.lambda_index, Polynomial.zero(vs))
        assert at_zero.drop_lambda() == determinant_leibniz(M)

    def test_evaluation_matches_numeric_char_poly(self):
        # det(M(x) - t*I) at a rational point equals charpoly evaluated there.
        M = build_matrix(2, 2)
        p = char_poly(M)
        x = (Fraction(1, 3), Fraction(1, 5))
        t = Fraction(2, 7)
        a = M.entry(1, 1).evaluate(x) - t
        b = M.entry(1, 2).evaluate(x)
        d = M.entry(2, 1).evaluate(x)
        e = M.entry(2, 2).evaluate(x) - t
        assert p.evaluate(x + (t,)) == a * e - b * d

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            char_poly(build_matrix(2, 3))
