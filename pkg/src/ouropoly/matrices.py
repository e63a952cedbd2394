"""Matrices of identity polynomials: traces, determinants, char polynomial.

The square n x n matrix with entry (k, j) = ``gen_p(n, k, j)`` collects the
order-(j+1) identity for every variable.  Its "trace" is taken here as the
PRODUCT of the diagonal entries, whose total degree obeys the closed formula
(n^2 + 3n) / 2; the conventional sum-of-diagonal trace is provided
separately as :func:`trace_sum` for contrast.  Determinants are expanded two
independent ways (permutation sum and cofactor recursion) so each serves as
an oracle for the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .generators import gen_p
from .polynomial import Polynomial, VarSpace

__all__ = [
    "Permutation",
    "permutations",
    "PolyMatrix",
    "build_matrix",
    "trace_product",
    "trace_sum",
    "trace_degree_formula",
    "degree_of_trace",
    "determinant_leibniz",
    "determinant_cofactor",
    "char_poly",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in one-line notation, with its inversion count."""

    mapping: "tuple[int, ...]"
    inversions: int = field(init=False)

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        n = len(mapping)
        if n < 1 or sorted(mapping) != list(range(1, n + 1)):
            raise ValueError(f"{mapping} is not a bijection on 1..{n}")
        inv = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if mapping[a] > mapping[b]
        )
        object.__setattr__(self, "inversions", inv)

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        """Image of i (1-based)."""
        return self.mapping[i - 1]

    @property
    def sign(self) -> int:
        """(-1) raised to the inversion count."""
        return -1 if self.inversions % 2 else 1

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.mapping[v - 1] for v in other.mapping))


def permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of {1..n}, in lexicographic order of mapping."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return (Permutation(m) for m in itertools.permutations(range(1, n + 1)))


class PolyMatrix:
    """Immutable rows x cols grid of polynomials over one variable space."""

    __slots__ = ("rows", "cols", "entries", "varspace")

    def __init__(self, rows: int, cols: int, entries: Sequence[Polynomial]):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix shape {rows}x{cols} is invalid")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, "
                f"got {len(entries)}"
            )
        varspace = entries[0].varspace
        if any(e.varspace != varspace for e in entries):
            raise ValueError("matrix entries must share one variable space")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.varspace = varspace

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        flat = tuple(itertools.chain.from_iterable(rows))
        return cls(len(rows), len(rows[0]), flat)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, k: int, j: int) -> Polynomial:
        """Entry in row k, column j (both 1-based)."""
        if not (1 <= k <= self.rows and 1 <= j <= self.cols):
            raise ValueError(
                f"entry ({k},{j}) outside {self.rows}x{self.cols} matrix"
            )
        return self.entries[(k - 1) * self.cols + (j - 1)]

    def row(self, k: int) -> "tuple[Polynomial, ...]":
        if not 1 <= k <= self.rows:
            raise ValueError(f"row {k} outside {self.rows}x{self.cols} matrix")
        return self.entries[(k - 1) * self.cols : k * self.cols]

    def diagonal(self) -> "tuple[Polynomial, ...]":
        _require_square(self)
        return tuple(self.entry(i, i) for i in range(1, self.rows + 1))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols} over {self.varspace})"


def build_matrix(n: int, m: int) -> PolyMatrix:
    """The n x m grid with entry (k, j) = gen_p(n, k, j).

    Column j holds the order-(j+1) identities, so the trivial first-order
    relations (which reduce to c_k - c_k) never appear.
    """
    if n < 1 or m < 1:
        raise ValueError(f"matrix shape {n}x{m} is invalid")
    entries = [
        gen_p(n, k, j) for k in range(1, n + 1) for j in range(1, m + 1)
    ]
    return PolyMatrix(n, m, entries)


def _require_square(M: PolyMatrix):
    if not M.is_square:
        raise ValueError(f"operation needs a square matrix, got {M.rows}x{M.cols}")


def trace_product(M: PolyMatrix) -> Polynomial:
    """Product of the diagonal entries, fully expanded.

    This is the trace notion used for these matrices (NOT the conventional
    sum; see :func:`trace_sum` for that).  Only the product form satisfies
    the (n^2 + 3n) / 2 degree formula.
    """
    diag = M.diagonal()
    result = diag[0]
    for entry in diag[1:]:
        result = result * entry
    return result


def trace_sum(M: PolyMatrix) -> Polynomial:
    """Conventional sum-of-diagonal trace, provided for contrast."""
    diag = M.diagonal()
    result = diag[0]
    for entry in diag[1:]:
        result = result + entry
    return result


def trace_degree_formula(n: int) -> int:
    """Degree of the product trace of the n x n matrix: (n^2 + 3n) / 2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return (n * n + 3 * n) // 2


def degree_of_trace(M: PolyMatrix) -> int:
    """Degree of the product trace, as the sum of the diagonal degrees.

    Never expands the product (degrees add over an integral domain), so
    this stays fast where the expansion would be enormous.
    """
    _require_square(M)
    total = 0
    for i, entry in enumerate(M.diagonal(), start=1):
        if entry.is_zero:
            raise ValueError(
                f"diagonal entry ({i},{i}) is zero: the product degree "
                "cannot be taken as a sum of degrees"
            )
        total += entry.total_degree()
    return total


def determinant_leibniz(M: PolyMatrix) -> Polynomial:
    """Determinant as the signed sum over all permutations:

        sum_sigma sign(sigma) * prod_i entry(sigma(i), i)

    with sign(sigma) = (-1)^inversions.  Permutations are consumed in
    lexicographic order; exact commutative addition makes the result
    independent of any accumulation order.
    """
    _require_square(M)
    n = M.rows
    acc: dict = {}
    for sigma in permutations(n):
        factors = [M.entry(sigma(i), i) for i in range(1, n + 1)]
        # Smallest operands first keeps intermediate expansions minimal.
        factors.sort(key=lambda p: len(p.terms))
        product = factors[0]
        for factor in factors[1:]:
            product = product * factor
        negate = sigma.sign < 0
        for c, mono in product.terms:
            if negate:
                c = -c
            prev = acc.get(mono)
            acc[mono] = c if prev is None else prev + c
    return Polynomial._from_dict(M.varspace, acc)


def determinant_cofactor(M: PolyMatrix) -> Polynomial:
    """Determinant by first-row cofactor expansion; oracle for the
    permutation-sum route."""
    _require_square(M)
    grid = tuple(M.row(k) for k in range(1, M.rows + 1))
    return _cofactor(grid, M.varspace)


def _cofactor(grid, varspace) -> Polynomial:
    if len(grid) == 1:
        return grid[0][0]
    total = Polynomial.zero(varspace)
    top, rest = grid[0], grid[1:]
    for j, entry in enumerate(top):
        if entry.is_zero:
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in rest)
        term = entry * _cofactor(minor, varspace)
        total = total - term if j % 2 else total + term
    return total


def char_poly(M: PolyMatrix) -> Polynomial:
    """det(M - lambda*I) over the space with lambda adjoined.

    The lambda-degree equals n; substituting lambda := 0 recovers the plain
    determinant.
    """
    _require_square(M)
    n = M.rows
    vs = VarSpace(M.varspace.n, lambda_adjoined=True)
    lam = Polynomial.lambda_var(vs)
    shifted = []
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            entry = M.entry(k, j).adjoin_lambda()
            if k == j:
                entry = entry - lam
            shifted.append(entry)
    return determinant_leibniz(PolyMatrix(n, n, shifted))
