"""Exact sparse multivariate polynomial arithmetic over the rationals.

Polynomials live in a fixed variable space of coefficient variables
c1 > c2 > ... > cn, optionally extended by a trailing eigenvalue variable
``lambda`` that sorts below every c-variable.  A polynomial is a tuple of
terms, each term pairing a nonzero rational coefficient with a monomial
(a tuple of non-negative exponents, one per variable).  Terms are kept in
strictly descending graded-lexicographic order, equal monomials are merged
and zero coefficients dropped, so two polynomials are equal exactly when
their term tuples are equal.  The zero polynomial is the empty term tuple.

Coefficients are exact: integral values are stored as ``int`` and
non-integral ones as ``fractions.Fraction``; both expose
``numerator``/``denominator`` and mix freely in arithmetic.  No floating
point is used anywhere.

All values are immutable after construction and every operation is a pure
function, so polynomials are safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "Rational",
    "Coefficient",
    "Monomial",
    "Term",
    "VarSpace",
    "Polynomial",
    "VarSpaceMismatchError",
    "MINUS_INFINITY",
    "Degree",
]

# Exact rational scalar; ints are accepted anywhere a Rational is and are
# kept exact throughout.
Rational = Fraction
Coefficient = Union[int, Fraction]

# One exponent per variable of the owning VarSpace, in variable order.
Monomial = "tuple[int, ...]"


class VarSpaceMismatchError(ValueError):
    """Raised when an operation mixes polynomials from different variable spaces."""


class _MinusInfinity:
    """Total degree of the zero polynomial.

    Orders strictly below every integer and absorbs addition, which keeps
    deg(a*b) = deg(a) + deg(b) true without special cases.
    """

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        return self

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()

Degree = Union[int, _MinusInfinity]


@dataclass(frozen=True)
class VarSpace:
    """The ordered variable universe c1 > c2 > ... > cn ( > lambda ).

    ``n`` counts the c-variables; ``lambda_adjoined`` appends the eigenvalue
    variable at the lowest priority so that c-only canonical forms are
    unchanged when embedded.
    """

    n: int
    lambda_adjoined: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"variable space needs n >= 1, got n={self.n}")

    @property
    def nvars(self) -> int:
        return self.n + (1 if self.lambda_adjoined else 0)

    @property
    def lambda_index(self) -> int:
        """1-based index of lambda in the variable order."""
        if not self.lambda_adjoined:
            raise ValueError("variable space has no lambda adjoined")
        return self.n + 1

    def names(self) -> "tuple[str, ...]":
        base = tuple(f"c{i}" for i in range(1, self.n + 1))
        return base + ("lambda",) if self.lambda_adjoined else base


class Term(NamedTuple):
    coefficient: Coefficient
    monomial: "tuple[int, ...]"


def _norm_coeff(value) -> Coefficient:
    # Canonical scalar: int when integral, Fraction otherwise.  Plain ints
    # keep the heavy all-integer code paths (determinants, generators) off
    # Fraction's gcd machinery.
    if type(value) is int:
        return value
    f = Fraction(value)
    return f.numerator if f.denominator == 1 else f


class Polynomial:
    """Canonical sparse polynomial over a :class:`VarSpace`.

    Construct via the classmethods (:meth:`zero`, :meth:`constant`,
    :meth:`variable`, ...) or by passing any iterable of
    ``(coefficient, monomial)`` pairs; duplicates are merged and the result
    is stored canonically.  Instances are immutable and hashable.
    """

    __slots__ = ("varspace", "terms")

    def __init__(self, varspace: VarSpace, terms: Iterable = ()):
        nvars = varspace.nvars
        acc: dict = {}
        for coeff, mono in terms:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(
                    f"monomial {mono} has {len(mono)} exponents, "
                    f"expected {nvars}"
                )
            if any(not isinstance(e, int) or e < 0 for e in mono):
                raise ValueError(f"monomial {mono} has invalid exponents")
            prev = acc.get(mono)
            acc[mono] = coeff if prev is None else prev + coeff
        object.__setattr__(self, "varspace", varspace)
        object.__setattr__(self, "terms", _canonical_terms(acc))

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, varspace: VarSpace, terms: "tuple[Term, ...]") -> "Polynomial":
        # Trusted path: terms must already be canonical.
        p = cls.__new__(cls)
        object.__setattr__(p, "varspace", varspace)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def _from_dict(cls, varspace: VarSpace, acc: dict) -> "Polynomial":
        return cls._raw(varspace, _canonical_terms(acc))

    @classmethod
    def zero(cls, varspace: VarSpace) -> "Polynomial":
        return cls._raw(varspace, ())

    @classmethod
    def constant(cls, varspace: VarSpace, value) -> "Polynomial":
        c = _norm_coeff(value)
        if c == 0:
            return cls.zero(varspace)
        return cls._raw(varspace, (Term(c, (0,) * varspace.nvars),))

    @classmethod
    def one(cls, varspace: VarSpace) -> "Polynomial":
        return cls.constant(varspace, 1)

    @classmethod
    def variable(cls, varspace: VarSpace, index: int) -> "Polynomial":
        """The monomial for variable ``index`` (1-based; lambda is last)."""
        if not 1 <= index <= varspace.nvars:
            raise ValueError(
                f"variable index {index} out of range 1..{varspace.nvars}"
            )
        mono = [0] * varspace.nvars
        mono[index - 1] = 1
        return cls._raw(varspace, (Term(1, tuple(mono)),))

    @classmethod
    def lambda_var(cls, varspace: VarSpace) -> "Polynomial":
        return cls.variable(varspace, varspace.lambda_index)

    # -- ring operations --------------------------------------------------

    def _require_same_space(self, other: "Polynomial"):
        if self.varspace != other.varspace:
            raise VarSpaceMismatchError(
                f"incompatible variable spaces {self.varspace} and {other.varspace}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = {m: c for c, m in self.terms}
        for c, m in other.terms:
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return Polynomial._from_dict(self.varspace, acc)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial._raw(
            self.varspace, tuple(Term(-c, m) for c, m in self.terms)
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_space(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.varspace)
        # Iterate the shorter operand outside: fewer zip/tuple rebuilds.
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        for ca, ma in a:
            for cb, mb in b:
                m = tuple(map(int.__add__, ma, mb))
                c = ca * cb
                prev = get(m)
                acc[m] = c if prev is None else prev + c
        return Polynomial._from_dict(self.varspace, acc)

    __rmul__ = __mul__

    def scale(self, value) -> "Polynomial":
        c = _norm_coeff(value)
        if c == 0:
            return Polynomial.zero(self.varspace)
        if c == 1:
            return self
        return Polynomial._raw(
            self.varspace,
            tuple(Term(_norm_coeff(tc * c), m) for tc, m in self.terms),
        )

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.one(self.varspace)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- queries ----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> Degree:
        """Max over terms of the exponent sum; MINUS_INFINITY for zero."""
        if not self.terms:
            return MINUS_INFINITY
        # Canonical order is graded, so the leading term has maximal degree.
        return sum(self.terms[0].monomial)

    def degree_in(self, var_index: int) -> Degree:
        """Largest exponent of variable ``var_index`` (1-based)."""
        if not 1 <= var_index <= self.varspace.nvars:
            raise ValueError(
                f"variable index {var_index} out of range 1..{self.varspace.nvars}"
            )
        if not self.terms:
            return MINUS_INFINITY
        i = var_index - 1
        return max(m[i] for _, m in self.terms)

    def coefficient_of(self, monomial) -> Coefficient:
        mono = tuple(monomial)
        for c, m in self.terms:
            if m == mono:
                return c
        return 0

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at ``point`` (one rational per variable, in order)."""
        nvars = self.varspace.nvars
        values = [Fraction(v) for v in point]
        if len(values) != nvars:
            raise ValueError(
                f"point has {len(values)} coordinates, expected {nvars}"
            )
        total = Fraction(0)
        for c, m in self.terms:
            term = Fraction(c)
            for v, e in zip(values, m):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, var_index: int, replacement: "Polynomial") -> "Polynomial":
        """Replace variable ``var_index`` (1-based) by ``replacement``."""
        if not 1 <= var_index <= self.varspace.nvars:
            raise ValueError(
                f"variable index {var_index} out of range 1..{self.varspace.nvars}"
            )
        self._require_same_space(replacement)
        i = var_index - 1
        max_e = 0
        for _, m in self.terms:
            if m[i] > max_e:
                max_e = m[i]
        # Powers of the replacement, filled incrementally up to the largest
        # exponent actually present.
        powers = [Polynomial.one(self.varspace)]
        for _ in range(max_e):
            powers.append(powers[-1] * replacement)
        acc: dict = {}
        for c, m in self.terms:
            e = m[i]
            if not e:
                prev = acc.get(m)
                acc[m] = c if prev is None else prev + c
                continue
            residual = m[:i] + (0,) + m[i + 1 :]
            for rc, rm in powers[e].terms:
                key = tuple(map(int.__add__, residual, rm))
                cc = c * rc
                prev = acc.get(key)
                acc[key] = cc if prev is None else prev + cc
        return Polynomial._from_dict(self.varspace, acc)

    # -- variable-space embeddings ----------------------------------------

    def adjoin_lambda(self) -> "Polynomial":
        """Embed into the same space with lambda adjoined (exponent 0)."""
        if self.varspace.lambda_adjoined:
            return self
        vs = VarSpace(self.varspace.n, lambda_adjoined=True)
        # Appending a trailing zero exponent preserves graded-lex order.
        return Polynomial._raw(
            vs, tuple(Term(c, m + (0,)) for c, m in self.terms)
        )

    def drop_lambda(self) -> "Polynomial":
        """Project a lambda-free polynomial back onto the plain c-space."""
        if not self.varspace.lambda_adjoined:
            return self
        if any(m[-1] for _, m in self.terms):
            raise ValueError("polynomial still involves lambda")
        vs = VarSpace(self.varspace.n)
        return Polynomial._raw(
            vs, tuple(Term(c, m[:-1]) for c, m in self.terms)
        )

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varspace == other.varspace and self.terms == other.terms

    def __hash__(self):
        return hash((self.varspace, self.terms))

    def __str__(self) -> str:
        return format_terms(self, self.varspace.names(), caret="^", joiner="")

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _grlex_key(mono):
    return (sum(mono), mono)


def _canonical_terms(acc: dict) -> "tuple[Term, ...]":
    items = [(m, _norm_coeff(c)) for m, c in acc.items() if c != 0]
    items.sort(key=lambda mc: _grlex_key(mc[0]), reverse=True)
    return tuple(Term(c, m) for m, c in items)


def format_coefficient(c: Coefficient) -> str:
    """Render a rational scalar as ``num`` or ``num/den``."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_terms(
    poly: Polynomial,
    names: Sequence[str],
    caret: str = "^",
    joiner: str = "",
    exp_braces: bool = False,
) -> str:
    """Shared term walker behind the plain and LaTeX renderings.

    Terms appear in canonical order; a unit coefficient is suppressed in
    front of a nonempty monomial part.
    """
    if not poly.terms:
        return "0"
    pieces = []
    for c, m in poly.terms:
        factors = []
        for name, e in zip(names, m):
            if e == 0:
                continue
            if e == 1:
                factors.append(name)
            elif exp_braces and len(str(e)) > 1:
                factors.append(f"{name}{caret}{{{e}}}")
            else:
                factors.append(f"{name}{caret}{e}")
        mono_part = joiner.join(factors)
        negative = c < 0
        mag = -c if negative else c
        if mono_part and mag == 1:
            body = mono_part
        elif mono_part:
            body = format_coefficient(mag) + joiner + mono_part
        else:
            body = format_coefficient(mag)
        sign = "-" if negative else ("+" if pieces else "")
        pieces.append(sign + body)
    return "".join(pieces)
