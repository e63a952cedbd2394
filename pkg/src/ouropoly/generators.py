"""Ouroboros polynomial families and linear-form self-composition.

A linear form f(x) = c1*x1 + ... + cn*xn whose coefficients sum to 1
reproduces itself under complete self-composition: feeding f into every one
of its own argument slots returns f.  Iterating that composition p times
multiplies the coefficient vector by (c1 + ... + cn)^p, and equating
x-coefficients before and after yields one polynomial identity per variable
and per iteration count.  This module generates those polynomials and
provides the composition machinery that independently validates the closed
form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polynomial import Polynomial, VarSpace

__all__ = [
    "LinearForm",
    "coefficient_sum",
    "gen_p",
    "gen_quadratic",
    "quadratic_roots",
    "base_form",
    "self_compose",
    "closed_form_iterate",
    "is_ouroboros_numeric",
]


def coefficient_sum(varspace: VarSpace) -> Polynomial:
    """c1 + c2 + ... + cn in the given space."""
    result = Polynomial.zero(varspace)
    for i in range(1, varspace.n + 1):
        result = result + Polynomial.variable(varspace, i)
    return result


@lru_cache(maxsize=None)
def _sum_power(n: int, j: int) -> Polynomial:
    # (c1 + ... + cn)^j, built incrementally so a whole matrix of entries
    # shares each power.  Safe to cache: polynomials are immutable.
    vs = VarSpace(n)
    if j == 0:
        return Polynomial.one(vs)
    return _sum_power(n, j - 1) * coefficient_sum(vs)


def _check_index(n: int, k: int):
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if not 1 <= k <= n:
        raise ValueError(f"variable index k={k} out of range 1..{n}")


def gen_p(n: int, k: int, j: int) -> Polynomial:
    """The order-(j+1) identity polynomial for variable k in n variables:

        c_k^(j+1) + (((c1+...+cn)^j - c_k^j) - 1) * c_k

    Vanishes identically whenever the c-variables sum to 1.  Total degree
    is j + 1.
    """
    _check_index(n, k)
    if j < 1:
        raise ValueError(f"iteration order j must be >= 1, got j={j}")
    vs = VarSpace(n)
    ck = Polynomial.variable(vs, k)
    inner = _sum_power(n, j) - ck**j - Polynomial.one(vs)
    return ck ** (j + 1) + inner * ck


def gen_quadratic(n: int, k: int) -> Polynomial:
    """The quadratic identity for variable k:

        c_k^2 + ((sum of the other variables) - 1) * c_k

    For n = 1 the "other variables" sum is empty, hence 0.  Canonically
    equal to ``gen_p(n, k, 1)``.
    """
    _check_index(n, k)
    vs = VarSpace(n)
    ck = Polynomial.variable(vs, k)
    others = Polynomial.zero(vs)
    for i in range(1, n + 1):
        if i != k:
            others = others + Polynomial.variable(vs, i)
    return ck**2 + (others - Polynomial.one(vs)) * ck


def quadratic_roots(n: int, k: int) -> "tuple[Polynomial, Polynomial]":
    """Symbolic roots of ``gen_quadratic(n, k)`` viewed as a quadratic in c_k.

    Returns (0, 1 - sum of the other variables), zero root first.
    Substituting either for c_k annihilates the quadratic.
    """
    _check_index(n, k)
    vs = VarSpace(n)
    other = Polynomial.one(vs)
    for i in range(1, n + 1):
        if i != k:
            other = other - Polynomial.variable(vs, i)
    return Polynomial.zero(vs), other


@dataclass(frozen=True)
class LinearForm:
    """A form sum_i g_i(c) * x_i: entry i is the coefficient polynomial of x_i."""

    varspace: VarSpace
    xcoeffs: "tuple[Polynomial, ...]"

    def __post_init__(self):
        if len(self.xcoeffs) != self.varspace.n:
            raise ValueError(
                f"form needs {self.varspace.n} coefficient entries, "
                f"got {len(self.xcoeffs)}"
            )
        for entry in self.xcoeffs:
            if entry.varspace != self.varspace:
                raise ValueError("form entries must share the variable space")


def base_form(n: int) -> LinearForm:
    """f(x) = c1*x1 + ... + cn*xn."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    vs = VarSpace(n)
    return LinearForm(
        vs, tuple(Polynomial.variable(vs, i) for i in range(1, n + 1))
    )


def self_compose(form: LinearForm, p: int) -> LinearForm:
    """Feed the previous iterate into every argument slot of ``form``, p times.

    All n slots receive the same inner value, so one composition step sends
    the x_j coefficient to sum_i form_i * inner_j.  The products are
    expanded symbolically term by term; this is the independent oracle for
    :func:`closed_form_iterate` and never consults the closed form.
    """
    if p < 0:
        raise ValueError(f"iteration count must be >= 0, got {p}")
    n = form.varspace.n
    current = form
    for _ in range(p):
        new_coeffs = []
        for j in range(n):
            acc = Polynomial.zero(form.varspace)
            for i in range(n):
                acc = acc + form.xcoeffs[i] * current.xcoeffs[j]
            new_coeffs.append(acc)
        current = LinearForm(form.varspace, tuple(new_coeffs))
    return current


def closed_form_iterate(n: int, p: int) -> LinearForm:
    """The p-th complete self-composition of the base form, in closed form:
    x_i coefficient (c1 + ... + cn)^p * c_i, fully expanded."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if p < 0:
        raise ValueError(f"iteration count must be >= 0, got {p}")
    vs = VarSpace(n)
    factor = _sum_power(n, p)
    return LinearForm(
        vs,
        tuple(factor * Polynomial.variable(vs, i) for i in range(1, n + 1)),
    )


def is_ouroboros_numeric(
    coeffs: Sequence, samples: int, seed: int
) -> bool:
    """Check f(f(x), ..., f(x)) = f(x) at seeded random rational points.

    ``coeffs`` are the c-values of a concrete linear form.  Every sampled
    point is tested exactly; for a linear form this agrees with the direct
    criterion sum(coeffs) = 1.
    """
    cs = [Fraction(c) for c in coeffs]
    if not cs:
        raise ValueError("coefficient vector must be nonempty")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    rng = random.Random(seed)
    n = len(cs)
    for _ in range(samples):
        point = [
            Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            for _ in range(n)
        ]
        fx = sum((c * x for c, x in zip(cs, point)), Fraction(0))
        # Complete self-composition: every argument slot receives f(x).
        composed = sum((c * fx for c in cs), Fraction(0))
        if composed != fx:
            return False
    return True
