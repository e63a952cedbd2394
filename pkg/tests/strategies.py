"""Shared hypothesis strategies and assertion helpers for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from ouropoly import Polynomial, VarSpace

nonzero_coefficients = st.fractions(
    min_value=-9, max_value=9, max_denominator=7
).filter(lambda q: q != 0)

rational_points = st.fractions(min_value=-5, max_value=5, max_denominator=6)

varspaces = st.integers(min_value=1, max_value=3).map(VarSpace)


@st.composite
def polynomials(draw, varspace=None, max_terms=5, max_exp=3):
    vs = draw(varspaces) if varspace is None else varspace
    nterms = draw(st.integers(min_value=0, max_value=max_terms))
    pairs = []
    for _ in range(nterms):
        coeff = draw(nonzero_coefficients)
        mono = tuple(
            draw(st.integers(min_value=0, max_value=max_exp))
            for _ in range(vs.nvars)
        )
        pairs.append((coeff, mono))
    return Polynomial(vs, pairs)


@st.composite
def poly_pairs(draw):
    vs = draw(varspaces)
    return draw(polynomials(varspace=vs)), draw(polynomials(varspace=vs))


@st.composite
def poly_triples(draw):
    vs = draw(varspaces)
    return tuple(draw(polynomials(varspace=vs)) for _ in range(3))


@st.composite
def poly_with_point(draw):
    vs = draw(varspaces)
    a = draw(polynomials(varspace=vs))
    point = tuple(draw(rational_points) for _ in range(vs.nvars))
    return a, point


@st.composite
def poly_pair_with_point(draw):
    vs = draw(varspaces)
    a = draw(polynomials(varspace=vs))
    b = draw(polynomials(varspace=vs))
    point = tuple(draw(rational_points) for _ in range(vs.nvars))
    return a, b, point


def assert_canonical(p: Polynomial) -> None:
    """Check every stored-form invariant of a polynomial."""
    seen = set()
    keys = []
    for coeff, mono in p.terms:
        assert coeff != 0, "zero coefficient stored"
        assert isinstance(coeff, (int, Fraction))
        if isinstance(coeff, Fraction):
            assert coeff.denominator > 1, "integral value stored as Fraction"
        assert len(mono) == p.varspace.nvars
        assert all(isinstance(e, int) and e >= 0 for e in mono)
        assert mono not in seen, "duplicate monomial"
        seen.add(mono)
        keys.append((sum(mono), mono))
    assert keys == sorted(keys, reverse=True), "terms out of graded-lex order"
