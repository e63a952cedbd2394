"""Exact symbolic toolkit for sum-to-1 vanishing polynomials.

The package builds a family of multivariate polynomials over the
rationals that vanish identically on the hyperplane c1 + ... + cn = 1,
assembles matrices from them, and verifies the vanishing property both
by symbolic reduction and by exact evaluation at sampled points.  All
arithmetic is exact; no floating point is used anywhere.
"""

from .constraints import (
    SimplexPoint,
    VerificationReport,
    reduce_mod_constraint,
    sample_simplex,
    verify_point,
    verify_vanishing_suite,
)
from .generators import (
    LinearForm,
    base_form,
    closed_form_iterate,
    coefficient_sum,
    gen_p,
    gen_quadratic,
    is_ouroboros_numeric,
    quadratic_roots,
    self_compose,
)
from .matrices import (
    Permutation,
    PolyMatrix,
    build_matrix,
    char_poly,
    degree_of_trace,
    determinant_cofactor,
    determinant_leibniz,
    permutations,
    trace_degree_formula,
    trace_product,
    trace_sum,
)
from .polynomial import (
    MINUS_INFINITY,
    Coefficient,
    Degree,
    Polynomial,
    Rational,
    Term,
    VarSpace,
    VarSpaceMismatchError,
)
from .serialization import (
    ParseError,
    parse_json,
    render_json,
    render_latex,
    render_plain,
)

__all__ = [
    "MINUS_INFINITY",
    "Coefficient",
    "Degree",
    "LinearForm",
    "ParseError",
    "Permutation",
    "PolyMatrix",
    "Polynomial",
    "Rational",
    "SimplexPoint",
    "Term",
    "VarSpace",
    "VarSpaceMismatchError",
    "VerificationReport",
    "base_form",
    "build_matrix",
    "char_poly",
    "closed_form_iterate",
    "coefficient_sum",
    "degree_of_trace",
    "determinant_cofactor",
    "determinant_leibniz",
    "gen_p",
    "gen_quadratic",
    "is_ouroboros_numeric",
    "parse_json",
    "permutations",
    "quadratic_roots",
    "reduce_mod_constraint",
    "render_json",
    "render_latex",
    "render_plain",
    "sample_simplex",
    "self_compose",
    "trace_degree_formula",
    "trace_product",
    "trace_sum",
    "verify_point",
    "verify_vanishing_suite",
]
