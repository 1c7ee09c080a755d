import itertools
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from cremona import (
    InversionData,
    NotCremonaError,
    equal_up_to_permutation,
    inverse_set,
    inversion_factor,
    invert,
    is_cohesive,
    is_cremona,
    log_matrix,
    minor_gcd,
    parse_monomials,
    verify_inversion,
)
from cremona.monomials import MonomialSet


def tri():
    return parse_monomials("x1*x2 / x1*x3 / x2*x3")


def pentagon():
    return parse_monomials("x1*x2 / x2*x3 / x3*x4 / x4*x5 / x5*x1")


def four_cycle():
    return parse_monomials("x1*x2 / x2*x3 / x3*x4 / x4*x1")


# solved by hand from the linear systems A w_j = gamma + e_j: each column is
# the minimal vertex cover of the 5-cycle forced by the right-hand side
PENTAGON_INVERSE_COLUMNS = (
    (1, 0, 1, 0, 1),
    (1, 1, 0, 1, 0),
    (0, 1, 1, 0, 1),
    (1, 0, 1, 1, 0),
    (0, 1, 0, 1, 1),
)


class TestMinorGcd:
    def test_identity(self):
        assert minor_gcd(log_matrix(parse_monomials("x1 / x2"))) == 1

    def test_triangle(self):
        assert minor_gcd(log_matrix(tri())) == 2

    def test_even_cycle(self):
        assert minor_gcd(log_matrix(four_cycle())) == 0

    def test_rejects_wide(self):
        with pytest.raises(ValueError):
            minor_gcd(log_matrix(parse_monomials("variables: x1 x2 x3\nx1*x2 / x2*x3")))

    def test_rejects_mixed_degrees(self):
        with pytest.raises(ValueError, match="stochastic"):
            minor_gcd(log_matrix(parse_monomials("x1 / x1*x2")))

    def test_oracle_on_wide_matrix(self):
        mset = parse_monomials("x1*x2 / x1*x3 / x2*x3 / x1^2 / x2^2")
        matrix = log_matrix(mset)
        expected = 0
        for cols in itertools.combinations(range(mset.q), mset.n):
            sub = [[matrix.entries[i][j] for j in cols] for i in range(mset.n)]
            det = (
                sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
            )
            expected = gcd(expected, abs(det))
        assert minor_gcd(matrix) == expected


class TestIsCremona:
    def test_triangle(self):
        report = is_cremona(tri())
        assert report.is_cremona and report.degree == 2
        assert report.minor_gcd == 2 and report.is_birational_onto_image

    def test_even_cycle(self):
        report = is_cremona(four_cycle())
        assert not report.is_cremona and report.minor_gcd == 0

    def test_coordinates(self):
        report = is_cremona(parse_monomials("x1 / x2 / x3"))
        assert report.is_cremona and report.degree == 1

    def test_canonical_violation_raises(self):
        with pytest.raises(NotCremonaError, match="canonical"):
            is_cremona(parse_monomials("x1*x2 / x1*x3"))

    def test_wide_birational_not_cremona(self):
        mset = parse_monomials("x1*x2 / x1*x3 / x2*x3 / x1^2")
        report = is_cremona(mset)
        assert report.is_birational_onto_image and not report.is_cremona


class TestInvert:
    def test_triangle_is_involution(self):
        data = invert(tri())
        assert inverse_set(tri(), data) == tri()
        assert data.inversion_vector == (1, 1, 1)
        assert data.inverse_degree == 2

    def test_pentagon(self):
        data = invert(pentagon())
        assert data.inverse_degree == 3
        assert data.inversion_vector == (1, 1, 1, 1, 1)
        assert (1, 0, 1, 0, 1) in data.inverse_columns()
        assert data.inverse_columns() == PENTAGON_INVERSE_COLUMNS

    def test_loop_case(self):
        mset = parse_monomials("x1^2 / x1*x2 / x2*x3")
        data = invert(mset)
        assert inverse_set(mset, data).texts() == ("x1*x2", "x2^2", "x1*x3")
        assert data.inversion_vector == (2, 1, 0)
        assert data.inverse_degree == 2

    def test_rejects_non_cremona(self):
        with pytest.raises(NotCremonaError):
            invert(four_cycle())

    def test_rejects_wide(self):
        with pytest.raises(NotCremonaError):
            invert(parse_monomials("x1*x2 / x1*x3 / x2*x3 / x1^2"))


class TestVerify:
    def test_triangle_true(self):
        assert verify_inversion(tri(), invert(tri()))

    def test_pentagon_hand_derived_inverse(self):
        rows = tuple(
            tuple(PENTAGON_INVERSE_COLUMNS[j][i] for j in range(5)) for i in range(5)
        )
        data = InversionData(rows, (1, 1, 1, 1, 1), 3)
        assert verify_inversion(pentagon(), data)

    def test_wrong_factor(self):
        good = invert(tri())
        bad = InversionData(good.inverse_matrix, (0, 0, 0), good.inverse_degree)
        assert not verify_inversion(tri(), bad)

    def test_wrong_matrix(self):
        good = invert(tri())
        rows = [list(r) for r in good.inverse_matrix]
        rows[0][0] += 1
        bad = InversionData(tuple(tuple(r) for r in rows), good.inversion_vector,
                            good.inverse_degree)
        assert not verify_inversion(tri(), bad)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            verify_inversion(tri(), InversionData(((1, 0), (0, 1)), (0, 0), 1))


class TestFactorText:
    def test_product(self):
        assert inversion_factor(invert(tri()), ("x1", "x2", "x3")) == "x1*x2*x3"

    def test_with_square(self):
        data = invert(parse_monomials("x1^2 / x1*x2 / x2*x3"))
        assert inversion_factor(data, ("x1", "x2", "x3")) == "x1^2*x2"

    def test_unit_for_permutations(self):
        data = invert(parse_monomials("x2 / x1 / x3"))
        assert inversion_factor(data, ("x1", "x2", "x3")) == "1"


@given(st.permutations(range(4)))
def test_degree_one_permutations(perm):
    vectors = tuple(
        tuple(1 if i == perm[j] else 0 for i in range(4)) for j in range(4)
    )
    mset = MonomialSet(("x1", "x2", "x3", "x4"), vectors)
    data = invert(mset)
    assert data.inversion_vector == (0, 0, 0, 0)
    # inverse of a permutation matrix is its transpose
    transpose = tuple(
        tuple(1 if perm[i] == j else 0 for j in range(4)) for i in range(4)
    )
    assert data.inverse_columns() == tuple(zip(*transpose))
    assert data.inverse_degree == 1


class TestCorpusProperties:
    def test_round_trip_and_degree_relation(self, small_corpus):
        for mset in small_corpus:
            data = invert(mset)
            assert verify_inversion(mset, data)
            assert 2 * data.inverse_degree == sum(data.inversion_vector) + 1
            assert all(v >= 0 for v in data.inversion_vector)
            back = invert(inverse_set(mset, data))
            assert equal_up_to_permutation(
                inverse_set(inverse_set(mset, data), back), mset
            )

    def test_minor_gcd_equals_degree(self, small_corpus):
        for mset in small_corpus:
            assert minor_gcd(log_matrix(mset)) == 2

    def test_cremona_sets_are_cohesive(self, small_corpus):
        for mset in small_corpus:
            assert is_cohesive(mset)
