import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.intlinalg import (
    adjugate,
    cone_inequalities,
    determinant,
    gcd_of_maximal_minors,
    invariant_factors,
    lattice_index,
    nonnegative_combination,
    satisfies_inequalities,
)


def det_laplace(m):
    # independent oracle: cofactor expansion along the first row
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_laplace(sub)
    return total


def square_matrices(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


class TestDeterminant:
    def test_identity(self):
        assert determinant(((1, 0), (0, 1))) == 1

    def test_triangle(self):
        assert determinant(((1, 1, 0), (1, 0, 1), (0, 1, 1))) == -2

    def test_even_cycle_singular(self):
        m = ((1, 0, 0, 1), (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1))
        assert determinant(m) == 0

    def test_not_square(self):
        with pytest.raises(ValueError):
            determinant(((1, 2, 3), (4, 5, 6)))

    @given(square_matrices())
    def test_matches_laplace(self, m):
        assert determinant(m) == det_laplace(m)


class TestAdjugate:
    @given(square_matrices(max_n=4))
    def test_adjugate_identity(self, m):
        n = len(m)
        adj = adjugate(m)
        det = determinant(m)
        for i in range(n):
            for j in range(n):
                entry = sum(m[i][k] * adj[k][j] for k in range(n))
                assert entry == (det if i == j else 0)


class TestSmith:
    def test_triangle_factors(self):
        assert invariant_factors(((1, 1, 0), (1, 0, 1), (0, 1, 1))) == (1, 1, 2)

    def test_identity(self):
        assert lattice_index(((1, 0), (0, 1))) == 1

    def test_singular(self):
        assert lattice_index(((1, 2), (2, 4))) == 0

    def test_rectangular(self):
        factors = invariant_factors(((2, 0, 0), (0, 3, 0)))
        assert factors == (1, 6)

    @given(square_matrices(max_n=4, lo=-5, hi=5))
    def test_index_equals_absolute_determinant(self, m):
        assert lattice_index(m) == abs(determinant(m))

    @given(square_matrices(max_n=4, lo=-5, hi=5))
    def test_divisibility_chain(self, m):
        factors = invariant_factors(m)
        for a, b in zip(factors, factors[1:]):
            if a and b:
                assert b % a == 0
            if a == 0:
                assert b == 0


class TestMinorGcd:
    def test_square_case_is_determinant(self):
        m = ((1, 1, 0), (1, 0, 1), (0, 1, 1))
        assert gcd_of_maximal_minors(m) == 2

    def test_brute_force_agreement(self):
        import itertools
        from math import gcd

        rng = random.Random(5)
        for _ in range(20):
            n, q = 3, 5
            rows = tuple(
                tuple(rng.randint(0, 2) for _ in range(q)) for _ in range(n)
            )
            expected = 0
            for cols in itertools.combinations(range(q), n):
                sub = [[rows[i][j] for j in cols] for i in range(n)]
                expected = gcd(expected, abs(det_laplace(sub)))
            assert gcd_of_maximal_minors(rows) == expected

    def test_workers_do_not_change_result(self):
        rng = random.Random(11)
        rows = tuple(tuple(rng.randint(0, 2) for _ in range(8)) for _ in range(3))
        assert gcd_of_maximal_minors(rows) == gcd_of_maximal_minors(rows, workers=4)


class TestFeasibility:
    def test_half_half(self):
        lam = nonnegative_combination(((2, 0, 1), (0, 2, 1)), (1, 1, 1))
        assert lam == [Fraction(1, 2), Fraction(1, 2)]

    def test_infeasible(self):
        assert nonnegative_combination(((2, 0, 1), (0, 2, 1)), (1, 0, 0)) is None

    def test_generator_in_own_cone(self):
        cols = ((2, 0, 1), (0, 2, 1), (1, 1, 1))
        for col in cols:
            assert nonnegative_combination(cols, col) is not None

    def test_zero_target(self):
        assert nonnegative_combination(((1, 2), (3, 4)), (0, 0)) == [0, 0]

    def test_negative_entries_handled(self):
        lam = nonnegative_combination(((1, -1), (0, 1)), (2, 1))
        assert lam is not None
        assert lam[0] * 1 + lam[1] * 0 == 2
        assert lam[0] * -1 + lam[1] * 1 == 1

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
            min_size=1,
            max_size=4,
        ),
        st.tuples(st.integers(-2, 6), st.integers(-2, 6), st.integers(-2, 6)),
    )
    @settings(max_examples=60)
    def test_solution_reconstructs_target(self, cols, target):
        lam = nonnegative_combination(cols, target)
        if lam is not None:
            assert all(v >= 0 for v in lam)
            for i in range(3):
                assert sum(l * c[i] for l, c in zip(lam, cols)) == target[i]


class TestFourierMotzkin:
    def test_known_cone(self):
        ineqs = cone_inequalities(((2, 0, 1), (0, 2, 1)))
        assert satisfies_inequalities(ineqs, (1, 1, 1))
        assert not satisfies_inequalities(ineqs, (1, 0, 0))
        assert not satisfies_inequalities(ineqs, (-1, 1, 1))

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
            min_size=1,
            max_size=4,
        ),
        st.tuples(st.integers(-2, 6), st.integers(-2, 6), st.integers(-2, 6)),
    )
    @settings(max_examples=60)
    def test_agrees_with_simplex(self, cols, point):
        ineqs = cone_inequalities(cols)
        by_simplex = nonnegative_combination(cols, point) is not None
        assert satisfies_inequalities(ineqs, point) == by_simplex
