"""JSON, LaTeX and plain-text rendering of polynomials, matrices, reports.

The JSON document for a polynomial is::

    {"vars": ["c1", "c2"], "terms": [{"coeff": "1", "exps": [2, 0]}, ...]}

``vars`` lists the variable names in order (``c1``..``cn``, then optionally
``lambda``); each term carries an exact coefficient string ("num" or
"num/den") and one exponent per variable.  Terms are emitted in canonical
graded-lex descending order and re-normalized on parse, so
``parse_json(render_json(p)) == p`` for every polynomial.

Plain text mirrors the LaTeX rendering minus backslashes and braces
(``c1^2+c1c2-c1`` versus ``c_1^2+c_1c_2-c_1``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .constraints import VerificationReport
from .matrices import PolyMatrix
from .polynomial import (
    Polynomial,
    VarSpace,
    format_coefficient,
    format_terms,
)

__all__ = [
    "ParseError",
    "render_json",
    "parse_json",
    "render_latex",
    "render_plain",
]


class ParseError(ValueError):
    """A polynomial document failed validation; the message names the field."""


def _poly_terms_doc(p: Polynomial) -> list:
    return [
        {"coeff": format_coefficient(c), "exps": list(m)} for c, m in p.terms
    ]


def _poly_doc(p: Polynomial) -> dict:
    return {"vars": list(p.varspace.names()), "terms": _poly_terms_doc(p)}


def _matrix_doc(M: PolyMatrix) -> dict:
    return {
        "rows": M.rows,
        "cols": M.cols,
        "vars": list(M.varspace.names()),
        "entries": [
            [_poly_terms_doc(M.entry(k, j)) for j in range(1, M.cols + 1)]
            for k in range(1, M.rows + 1)
        ],
    }


def _report_doc(r: VerificationReport) -> dict:
    return {
        "cases_total": r.cases_total,
        "cases_passed": r.cases_passed,
        "failures": [
            {"n": n, "k": k, "j": j, "detail": detail}
            for n, k, j, detail in r.failures
        ],
    }


def render_json(obj: Union[Polynomial, PolyMatrix, VerificationReport]) -> str:
    """Deterministic canonical JSON for a polynomial, matrix, or report."""
    if isinstance(obj, Polynomial):
        doc = _poly_doc(obj)
    elif isinstance(obj, PolyMatrix):
        doc = _matrix_doc(obj)
    elif isinstance(obj, VerificationReport):
        doc = _report_doc(obj)
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as JSON")
    return json.dumps(doc, separators=(",", ":"))


def _parse_coeff(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"{where}: coefficient must be a string, got {text!r}")
    num_s, slash, den_s = text.partition("/")
    try:
        num = int(num_s)
        den = int(den_s) if slash else 1
    except ValueError:
        raise ParseError(f"{where}: malformed rational {text!r}") from None
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {text!r}")
    return Fraction(num, den)


def _parse_varspace(names, where: str) -> VarSpace:
    if not isinstance(names, list) or not names:
        raise ParseError(f"{where}: must be a nonempty list of variable names")
    lambda_adjoined = names[-1] == "lambda"
    cnames = names[:-1] if lambda_adjoined else names
    expected = [f"c{i}" for i in range(1, len(cnames) + 1)]
    if cnames != expected or not cnames:
        raise ParseError(
            f"{where}: expected c1..cn (optionally followed by \"lambda\"), "
            f"got {names!r}"
        )
    return VarSpace(len(cnames), lambda_adjoined=lambda_adjoined)


def parse_json(text: str) -> Polynomial:
    """Parse a polynomial document; normalizes term order and duplicates."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("document: expected a JSON object")
    if "vars" not in doc:
        raise ParseError("document: missing \"vars\"")
    if "terms" not in doc:
        raise ParseError("document: missing \"terms\"")
    vs = _parse_varspace(doc["vars"], "vars")
    terms_doc = doc["terms"]
    if not isinstance(terms_doc, list):
        raise ParseError("terms: expected a list")
    pairs = []
    for i, term in enumerate(terms_doc):
        where = f"terms[{i}]"
        if not isinstance(term, dict):
            raise ParseError(f"{where}: expected an object")
        if "coeff" not in term or "exps" not in term:
            raise ParseError(f"{where}: needs \"coeff\" and \"exps\"")
        coeff = _parse_coeff(term["coeff"], f"{where}.coeff")
        exps = term["exps"]
        if not isinstance(exps, list) or len(exps) != vs.nvars:
            raise ParseError(
                f"{where}.exps: expected {vs.nvars} exponents, got {exps!r}"
            )
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ParseError(
                    f"{where}.exps: negative or non-integer exponent {e!r}"
                )
        pairs.append((coeff, tuple(exps)))
    return Polynomial(vs, pairs)


def render_latex(a: Polynomial) -> str:
    """Human-readable LaTeX: subscripted variables, caret exponents,
    canonical term order.  Zero renders as "0"."""
    names = []
    for i in range(1, a.varspace.n + 1):
        names.append(f"c_{{{i}}}" if i >= 10 else f"c_{i}")
    if a.varspace.lambda_adjoined:
        names.append("\\lambda")
    return format_terms(a, names, caret="^", joiner="", exp_braces=True)


def render_plain(a: Polynomial) -> str:
    """The grep-friendly form: LaTeX minus backslashes and braces."""
    return str(a)
