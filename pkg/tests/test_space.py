"""Space expressions: grammar, homology series, profiles, wedge decompositions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopgrowth.series import RationalGF, gf_shift
from loopgrowth.space import (
    ParseError,
    Product,
    Smash,
    Sphere,
    Susp,
    Wedge,
    homology_gf,
    is_rational_sphere_wedge,
    parse,
    profile,
    reduced_gf,
    to_text,
    wedge_decomposition,
)


# -- parsing -------------------------------------------------------------------


class TestParse:
    def test_sphere(self):
        assert parse("S3") == Sphere(3)

    def test_wedge(self):
        assert parse("S2 v S2") == Wedge(Sphere(2), Sphere(2))

    def test_precedence_smash_product_wedge(self):
        got = parse("Susp(S2 ^ S3) x S4")
        assert got == Product(Susp(Smash(Sphere(2), Sphere(3))), Sphere(4))

    def test_precedence_chain(self):
        got = parse("S2 v S3 ^ S4 x S5")
        assert got == Wedge(Sphere(2), Product(Smash(Sphere(3), Sphere(4)), Sphere(5)))

    def test_left_associativity(self):
        assert parse("S2 v S3 v S4") == Wedge(Wedge(Sphere(2), Sphere(3)), Sphere(4))
        assert parse("S2 x S3 x S4") == Product(Product(Sphere(2), Sphere(3)), Sphere(4))

    def test_parens_override(self):
        assert parse("S2 v (S3 v S4)") == Wedge(Sphere(2), Wedge(Sphere(3), Sphere(4)))

    def test_whitespace_insensitive(self):
        assert parse(" S2\tv\nS3 ") == parse("S2vS3") == Wedge(Sphere(2), Sphere(3))

    def test_sphere_must_be_simply_connected(self):
        with pytest.raises(ParseError, match="simply connected") as err:
            parse("S1")
        assert err.value.offset == 0

    def test_sphere_node_validates_too(self):
        with pytest.raises(ValueError, match="simply connected"):
            Sphere(1)

    def test_error_reports_offset_and_expected(self):
        with pytest.raises(ParseError) as err:
            parse("S2 v v S3")
        assert err.value.offset == 5
        assert set(err.value.expected) == {"S<int>", "Susp", "("}
        assert "at offset 5" in str(err.value)

    def test_error_at_end_of_input(self):
        with pytest.raises(ParseError, match="end of input") as err:
            parse("S2 v")
        assert err.value.offset == 4

    def test_error_missing_close_paren(self):
        with pytest.raises(ParseError) as err:
            parse("(S2 v S3")
        assert err.value.expected == (")",)

    def test_error_susp_needs_parens(self):
        with pytest.raises(ParseError) as err:
            parse("Susp S2")
        assert err.value.expected == ("(",)

    def test_error_trailing_garbage(self):
        with pytest.raises(ParseError) as err:
            parse("S2 S3")
        assert err.value.offset == 3
        assert "end of input" in err.value.expected

    def test_error_unknown_character(self):
        with pytest.raises(ParseError, match="unexpected character") as err:
            parse("S2 & S3")
        assert err.value.offset == 3


class TestPrint:
    def test_minimal_parens(self):
        assert to_text(parse("(S2 v S3) x S4")) == "(S2 v S3) x S4"
        assert to_text(parse("S2 v (S3 x S4)")) == "S2 v S3 x S4"

    def test_right_nested_keeps_parens(self):
        assert to_text(Wedge(Sphere(2), Wedge(Sphere(3), Sphere(4)))) == "S2 v (S3 v S4)"
        assert to_text(Wedge(Wedge(Sphere(2), Sphere(3)), Sphere(4))) == "S2 v S3 v S4"

    def test_susp(self):
        assert to_text(Susp(Smash(Sphere(2), Sphere(3)))) == "Susp(S2 ^ S3)"


# -- homology series -------------------------------------------------------------


class TestHomology:
    def test_sphere(self):
        assert homology_gf(Sphere(3)).num.coeffs == (1, 0, 0, 1)

    def test_product_kunneth(self):
        assert homology_gf(parse("S2 x S3")).num.coeffs == (1, 0, 1, 1, 0, 1)

    def test_smash_of_spheres(self):
        assert homology_gf(parse("S2 ^ S3")).num.coeffs == (1, 0, 0, 0, 0, 1)

    def test_wedge_adds_reduced(self):
        assert homology_gf(parse("S2 v S2")).num.coeffs == (1, 0, 2)

    def test_susp_shifts_reduced(self):
        assert homology_gf(Susp(Sphere(2))).num.coeffs == (1, 0, 0, 1)

    def test_always_polynomial_with_unit_constant(self):
        h = homology_gf(parse("Susp(S2 ^ S3) x S4"))
        assert h.is_polynomial()
        assert h.num.constant_term() == 1

    def test_reduced_variant(self):
        assert reduced_gf(Sphere(2)).num.coeffs == (0, 0, 1)


# -- profiles ----------------------------------------------------------------------


class TestProfile:
    def test_sphere(self):
        p = profile(Sphere(3))
        assert (p.connectivity, p.dimension) == (2, 3)
        assert p.rationally_nontrivial

    def test_wedge_takes_min_and_max(self):
        p = profile(parse("S2 v S5"))
        assert (p.connectivity, p.dimension) == (1, 5)

    def test_smash_then_susp(self):
        p = profile(parse("Susp(S2 ^ S2)"))
        assert (p.connectivity, p.dimension) == (4, 5)

    def test_product_sums_dimension(self):
        p = profile(parse("S2 x S3"))
        assert (p.connectivity, p.dimension) == (1, 5)


# -- wedge decomposition ---------------------------------------------------------


class TestWedgeDecomposition:
    def test_suspension_of_wedge(self):
        assert wedge_decomposition(parse("Susp(S2 v S2)")).spheres == ((3, 2),)

    def test_plain_wedge(self):
        assert wedge_decomposition(parse("S2 v S2 v S5")).spheres == ((2, 2), (5, 1))

    def test_smash_with_wedge(self):
        got = wedge_decomposition(parse("Susp(S2 ^ (S2 v S3))"))
        assert got.spheres == ((5, 1), (6, 1))

    def test_product_rejected(self):
        with pytest.raises(ValueError, match="not rationally a wedge of spheres"):
            wedge_decomposition(parse("S2 x S3"))

    def test_suspended_product_accepted(self):
        got = wedge_decomposition(parse("Susp(S2 x S2)"))
        assert got.spheres == ((3, 2), (5, 1))

    def test_smash_against_sphere_suspends_a_product(self):
        got = wedge_decomposition(parse("(S2 x S2) ^ S3"))
        assert got.spheres == ((5, 2), (7, 1))

    def test_least_dimension(self):
        assert wedge_decomposition(parse("S5 v S2")).least_dimension() == 2

    def test_series_reconstructs_input(self):
        x = parse("Susp(S2 v S3) v S4")
        assert wedge_decomposition(x).series() == homology_gf(x)


# -- randomized structural invariants ----------------------------------------------


def exprs():
    leaves = st.integers(2, 5).map(Sphere)
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.tuples(inner, inner).map(lambda t: Wedge(*t)),
            st.tuples(inner, inner).map(lambda t: Product(*t)),
            st.tuples(inner, inner).map(lambda t: Smash(*t)),
            inner.map(Susp),
        ),
        max_leaves=8,
    )


class TestInvariants:
    @given(exprs())
    @settings(max_examples=100, deadline=None)
    def test_susp_shifts_reduced_series(self, x):
        assert reduced_gf(Susp(x)) == gf_shift(reduced_gf(x), 1)

    @given(exprs(), exprs())
    @settings(max_examples=100, deadline=None)
    def test_smash_multiplies_reduced_series(self, a, b):
        assert reduced_gf(Smash(a, b)) == reduced_gf(a) * reduced_gf(b)

    @given(exprs())
    @settings(max_examples=100, deadline=None)
    def test_profile_brackets_reduced_series(self, x):
        p = profile(x)
        red = reduced_gf(x).num
        assert 1 <= p.connectivity < p.dimension
        assert all(red[i] == 0 for i in range(p.connectivity + 1))
        assert red.degree() <= p.dimension
        assert p.rationally_nontrivial == (not red.is_zero())

    @given(exprs())
    @settings(max_examples=100, deadline=None)
    def test_parse_print_round_trip(self, x):
        assert parse(to_text(x)) == x

    @given(exprs())
    @settings(max_examples=100, deadline=None)
    def test_decomposition_reconstructs_reduced_series(self, x):
        if not is_rational_sphere_wedge(x):
            with pytest.raises(ValueError, match="product detected"):
                wedge_decomposition(x)
            return
        got = wedge_decomposition(x)
        assert got.series() == homology_gf(x)
        assert all(dim >= 2 and mult >= 1 for dim, mult in got.spheres)
        assert got.series() - RationalGF.constant(1) == reduced_gf(x)
