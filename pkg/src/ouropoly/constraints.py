"""Verification that identity polynomials vanish when the c-variables sum to 1.

Two independent routes are provided.  Symbolically,
:func:`reduce_mod_constraint` eliminates the last variable via
cn := 1 - (c1 + ... + c(n-1)), which is a canonical normal form modulo the
ideal generated by (c1 + ... + cn - 1); a polynomial lies in that ideal
exactly when it reduces to zero.  Numerically, :func:`verify_point`
evaluates at exact rational points on the sum-to-1 simplex.  There is no
tolerance anywhere: every check is an exact identity over the rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .generators import gen_p
from .polynomial import Polynomial

__all__ = [
    "SimplexPoint",
    "VerificationReport",
    "reduce_mod_constraint",
    "sample_simplex",
    "verify_point",
    "verify_vanishing_suite",
]


@dataclass(frozen=True)
class SimplexPoint:
    """Exact rational coordinates summing to 1."""

    coords: "tuple[Fraction, ...]"

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ValueError("simplex point needs at least one coordinate")
        if sum(coords) != 1:
            raise ValueError(
                f"coordinates sum to {sum(coords)}, expected exactly 1"
            )

    def __len__(self) -> int:
        return len(self.coords)


@dataclass
class VerificationReport:
    """Aggregate outcome of a vanishing suite run.

    ``failures`` holds one (n, k, j, detail) tuple per failed case, so
    ``cases_passed == cases_total - len(failures)`` always.
    """

    cases_total: int = 0
    cases_passed: int = 0
    failures: "list[tuple[int, int, int, str]]" = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def _record(self, ok: bool, n: int, k: int, j: int, detail: str):
        self.cases_total += 1
        if ok:
            self.cases_passed += 1
        else:
            self.failures.append((n, k, j, detail))


def reduce_mod_constraint(a: Polynomial) -> Polynomial:
    """Canonical representative of ``a`` modulo (c1 + ... + cn - 1).

    Eliminates the highest-index variable cn by substituting
    1 - (c1 + ... + c(n-1)); the result never mentions cn.  A lambda
    variable, if adjoined, is untouched.  For n = 1 this substitutes
    c1 := 1 outright.
    """
    vs = a.varspace
    n = vs.n
    replacement = Polynomial.one(vs)
    for i in range(1, n):
        replacement = replacement - Polynomial.variable(vs, i)
    return a.substitute(n, replacement)


def sample_simplex(n: int, seed: int) -> SimplexPoint:
    """Deterministic exact point on the sum-to-1 simplex.

    Draws n integers uniformly from [1, 1000] and normalizes by their sum,
    which is positive by construction, so the coordinates sum to exactly 1.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    rng = random.Random(seed)
    draws = [rng.randint(1, 1000) for _ in range(n)]
    total = sum(draws)
    return SimplexPoint(tuple(Fraction(d, total) for d in draws))


def verify_point(a: Polynomial, pt: SimplexPoint) -> bool:
    """True iff ``a`` evaluates to exactly 0 at ``pt``."""
    if a.varspace.lambda_adjoined:
        raise ValueError("point verification applies to lambda-free polynomials")
    if len(pt) != a.varspace.n:
        raise ValueError(
            f"point has {len(pt)} coordinates, polynomial has "
            f"{a.varspace.n} variables"
        )
    return a.evaluate(pt.coords) == 0


def verify_vanishing_suite(
    n_max: int, j_max: int, samples: int, seed: int
) -> VerificationReport:
    """Sweep every (n, k, j) with n <= n_max, k <= n, j <= j_max.

    Each triple contributes one symbolic case (the constraint reduction of
    ``gen_p(n, k, j)`` must be the zero polynomial) and, when samples > 0,
    one point case (the polynomial must evaluate to 0 at ``samples`` seeded
    simplex points; any nonzero value fails the case).  Failures are data
    in the report, never exceptions.
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if j_max < 1:
        raise ValueError(f"need j_max >= 1, got {j_max}")
    if samples < 0:
        raise ValueError(f"need samples >= 0, got {samples}")
    report = VerificationReport()
    for n in range(1, n_max + 1):
        points = [sample_simplex(n, seed + t) for t in range(samples)]
        for k in range(1, n + 1):
            for j in range(1, j_max + 1):
                poly = gen_p(n, k, j)
                residue = reduce_mod_constraint(poly)
                report._record(
                    residue.is_zero,
                    n,
                    k,
                    j,
                    f"constraint reduction left {residue}",
                )
                if not points:
                    continue
                detail = ""
                for t, pt in enumerate(points):
                    if not verify_point(poly, pt):
                        detail = f"sample {t} evaluates to {poly.evaluate(pt.coords)}"
                        break
                report._record(not detail, n, k, j, detail)
    return report
