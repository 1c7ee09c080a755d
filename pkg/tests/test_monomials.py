import pytest
from hypothesis import given, strategies as st

from cremona import (
    MonomialSet,
    ParseError,
    check_canonical,
    equal_up_to_permutation,
    find_permutation_match,
    is_cohesive,
    log_matrix,
    parse_monomials,
    render_monomial,
)
from cremona.monomials import (
    all_degree_monomials,
    canonical_permutation_form,
    common_factor_vector,
    monomial_set_from_json,
    monomial_set_to_json,
)


def tri():
    return parse_monomials("x1*x2 / x1*x3 / x2*x3")


class TestParsing:
    def test_slash_separated(self):
        mset = tri()
        assert mset.variables == ("x1", "x2", "x3")
        assert mset.vectors == ((1, 1, 0), (1, 0, 1), (0, 1, 1))

    def test_declared_variables(self):
        mset = parse_monomials("x1^2", variables=["x1", "x2"])
        assert mset.vectors == ((2, 0),)

    def test_header_declaration(self):
        mset = parse_monomials("variables: x1 x2 x3\nx1*x2")
        assert mset.variables == ("x1", "x2", "x3")
        assert mset.vectors == ((1, 1, 0),)

    def test_newline_separated(self):
        mset = parse_monomials("x1*x2\nx2^2")
        assert mset.vectors == ((1, 1), (0, 2))

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_monomials("x1^-1")

    def test_malformed_token(self):
        with pytest.raises(ParseError):
            parse_monomials("x1*^2 / x2*x3")

    def test_duplicate_monomial(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_monomials("x1*x2 / x1*x2")

    def test_undeclared_variable(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_monomials("y*x1", variables=["x1", "x2"])

    def test_single_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_monomials("x1^2")

    def test_json_round_trip(self):
        mset = tri()
        assert monomial_set_from_json(monomial_set_to_json(mset)) == mset

    def test_json_bad_shape(self):
        with pytest.raises(ParseError):
            monomial_set_from_json({"variables": ["x", "y"], "monomials": [[1, "a"]]})


class TestRender:
    def test_plain_product(self):
        assert render_monomial((1, 1, 1), ("x1", "x2", "x3")) == "x1*x2*x3"

    def test_with_power(self):
        assert render_monomial((2, 1, 0), ("x1", "x2", "x3")) == "x1^2*x2"

    def test_unit(self):
        assert render_monomial((0, 0, 0), ("x1", "x2", "x3")) == "1"

    def test_parse_render_round_trip(self):
        mset = parse_monomials("x1^2*x3 / x2*x3 / x1*x2")
        again = parse_monomials(" / ".join(mset.texts()))
        assert again == mset


class TestLogMatrix:
    def test_triangle(self):
        m = log_matrix(tri())
        assert m.entries == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
        assert m.degree == 2

    def test_identity(self):
        m = log_matrix(parse_monomials("x1 / x2"))
        assert m.entries == ((1, 0), (0, 1))
        assert m.degree == 1

    def test_square_pair(self):
        m = log_matrix(parse_monomials("x1^2 / x1*x2"))
        assert m.entries == ((2, 1), (0, 1))
        assert m.degree == 2

    def test_mixed_degrees(self):
        m = log_matrix(parse_monomials("x1 / x1*x2"))
        assert m.degree is None


@st.composite
def monomial_sets(draw):
    n = draw(st.integers(2, 4))
    q = draw(st.integers(1, 5))
    vecs = draw(
        st.lists(
            st.tuples(*([st.integers(0, 3)] * n)),
            min_size=q,
            max_size=q,
            unique=True,
        )
    )
    return MonomialSet(tuple(f"x{i}" for i in range(1, n + 1)), tuple(vecs))


class TestProperties:
    @given(monomial_sets())
    def test_columns_reproduce_vectors(self, mset):
        assert log_matrix(mset).columns() == mset.vectors

    @given(monomial_sets())
    def test_common_factor_cross_check(self, mset):
        report = check_canonical(mset)
        gcd_vec = common_factor_vector(mset)
        assert report.no_common_factor == all(e == 0 for e in gcd_vec)

    @given(monomial_sets(), st.randoms(use_true_random=False))
    def test_permutation_equivalence_invariant(self, mset, rng):
        entries = log_matrix(mset).entries
        rows = list(range(mset.n))
        cols = list(range(mset.q))
        rng.shuffle(rows)
        rng.shuffle(cols)
        shuffled = tuple(tuple(entries[i][j] for j in cols) for i in rows)
        assert equal_up_to_permutation(entries, shuffled)

    @given(monomial_sets())
    def test_canonical_form_is_equivalent_copy(self, mset):
        entries = log_matrix(mset).entries
        assert equal_up_to_permutation(entries, canonical_permutation_form(entries))


class TestCanonical:
    def test_triangle_ok(self):
        report = check_canonical(tri())
        assert report.no_common_factor and report.every_variable_appears
        assert report.offending_rows == ()

    def test_common_factor(self):
        report = check_canonical(parse_monomials("x1*x2 / x1*x3"))
        assert not report.no_common_factor
        assert report.offending_rows == (0,)

    def test_unused_variable(self):
        report = check_canonical(parse_monomials("variables: x1 x2 x3\nx1*x2"))
        assert not report.every_variable_appears
        assert 2 in report.offending_rows

    def test_unused_variable_with_several_monomials(self):
        report = check_canonical(parse_monomials("variables: x1 x2 x3\nx1^2 / x2^2"))
        assert not report.every_variable_appears
        assert report.no_common_factor
        assert report.offending_rows == (2,)


class TestCohesive:
    def test_block_diagonal(self):
        assert not is_cohesive(parse_monomials("x1*x2 / x3*x4"))

    def test_triangle(self):
        assert is_cohesive(tri())

    def test_pentagon(self):
        assert is_cohesive(parse_monomials("x1*x2 / x2*x3 / x3*x4 / x4*x5 / x5*x1"))


class TestPermutationMatch:
    def test_match_is_valid(self):
        a = log_matrix(parse_monomials("x1*x2 / x1*x3 / x2*x3 / x3*x4")).entries
        b = tuple(tuple(a[i][j] for j in (2, 0, 1, 3)) for i in (2, 0, 1, 3))
        found = find_permutation_match(a, b)
        assert found is not None
        sigma, tau = found
        rebuilt = tuple(
            tuple(a[sigma[i]][tau[j]] for j in range(len(a[0])))
            for i in range(len(a))
        )
        assert rebuilt == b

    def test_no_match(self):
        a = ((1, 1, 0), (1, 0, 1), (0, 1, 1))
        b = ((2, 1, 0), (0, 1, 1), (0, 0, 1))
        assert find_permutation_match(a, b) is None
        assert not equal_up_to_permutation(a, b)

    def test_dimension_mismatch(self):
        assert not equal_up_to_permutation(((1,),), ((1,), (0,)))


def test_all_degree_monomials_order():
    six = all_degree_monomials(("x", "y", "z"), 2)
    assert six.texts() == ("x*y", "x*z", "y*z", "x^2", "y^2", "z^2")
