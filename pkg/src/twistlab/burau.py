"""Burau representations over exact Laurent polynomials.

The unreduced representation sends ``sigma_i`` to the identity matrix with
the 2x2 block ``[[1-t, t], [1, 0]]`` at rows and columns ``(i, i+1)``; it
fixes the all-ones column vector, and the reduced representation is the
induced action on the quotient of Z^n by that vector (basis: images of
``e_1 .. e_{n-1}``).  Words act functionally, so the matrix of a
chronological word is the product of letter matrices taken right-to-left.

Coefficients are exact: Laurent polynomials are stored as sorted
``(exponent, coefficient)`` pairs with no zero coefficients.  Products with
generator matrices touch only two columns, so long words stay cheap.

At ``t = -1`` the reduced representation computes the action on the first
homology of the double cover of the disk branched over the punctures;
``is_torelli_shadow`` tests whether a pure braid acts trivially there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .braids import BraidWord, is_pure


# -- Laurent polynomials ---------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in one variable ``t``."""

    terms: tuple[tuple[int, int], ...] = ()  # sorted (exponent, coeff), coeff != 0

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((e, c) for e, c in self.terms if c != 0))
        exps = [e for e, _ in cleaned]
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponents in Laurent terms")
        object.__setattr__(self, "terms", cleaned)

    # constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),) if c else ())

    @classmethod
    def t_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls(((e, c),) if c else ())

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(tuple(acc.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(tuple(acc.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, t0: int | Fraction) -> Fraction:
        t0 = Fraction(t0)
        if t0 == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        return sum((Fraction(c) * t0**e for e, c in self.terms), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


P_ZERO = LaurentPoly()
P_ONE = LaurentPoly.constant(1)
P_T = LaurentPoly.t_power(1)
P_T_INV = LaurentPoly.t_power(-1)
P_ONE_MINUS_T = P_ONE - P_T
P_ONE_MINUS_T_INV = P_ONE - P_T_INV

Matrix = tuple[tuple[LaurentPoly, ...], ...]


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(P_ONE if i == j else P_ZERO for j in range(n)) for i in range(n)
    )


def matrix_mul(x: Matrix, y: Matrix) -> Matrix:
    n, m, k = len(x), len(y[0]), len(y)
    assert len(x[0]) == k
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = P_ZERO
            for s in range(k):
                if x[i][s].is_zero() or y[s][j].is_zero():
                    continue
                acc = acc + x[i][s] * y[s][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def evaluate_at(matrix: Matrix, t0: int | Fraction) -> tuple[tuple[Fraction, ...], ...]:
    """Exact numeric specialization of a symbolic matrix."""
    return tuple(tuple(p.evaluate(t0) for p in row) for row in matrix)


def det(matrix: Matrix) -> LaurentPoly:
    """Determinant by Laplace expansion with minor caching (small sizes)."""
    n = len(matrix)
    assert all(len(row) == n for row in matrix)

    @cache
    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        if not rows:
            return P_ONE
        i = rows[0]
        acc = P_ZERO
        for pos, j in enumerate(cols):
            entry = matrix[i][j]
            if entry.is_zero():
                continue
            sub = minor(rows[1:], cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        return acc

    return minor(tuple(range(n)), tuple(range(n)))


# -- representations -------------------------------------------------------


def _apply_letter_columns(rows: list[list[LaurentPoly]], letter: int) -> None:
    """Right-multiply by the unreduced matrix of one generator in place."""
    i = abs(letter) - 1
    if letter > 0:
        # block [[1-t, t], [1, 0]] at (i, i+1)
        for row in rows:
            ci, cj = row[i], row[i + 1]
            row[i] = ci * P_ONE_MINUS_T + cj
            row[i + 1] = ci * P_T
    else:
        # block [[0, 1], [t^-1, 1 - t^-1]]
        for row in rows:
            ci, cj = row[i], row[i + 1]
            row[i] = cj * P_T_INV
            row[i + 1] = ci + cj * P_ONE_MINUS_T_INV


def burau_unreduced(word: BraidWord) -> Matrix:
    """Matrix of the word under the unreduced Burau representation."""
    n = word.strands
    rows = [
        [P_ONE if i == j else P_ZERO for j in range(n)] for i in range(n)
    ]
    # product of letter matrices right-to-left = right-multiply in reverse
    for letter in reversed(word.letters):
        _apply_letter_columns(rows, letter)
    return tuple(tuple(row) for row in rows)


def _reduce_matrix(unreduced: Matrix) -> Matrix:
    """Quotient action on Z^n / (all-ones vector), basis e_1 .. e_{n-1}."""
    n = len(unreduced)
    return tuple(
        tuple(unreduced[i][j] - unreduced[n - 1][j] for j in range(n - 1))
        for i in range(n - 1)
    )


def burau_reduced(word: BraidWord) -> Matrix:
    return _reduce_matrix(burau_unreduced(word))


def burau_unreduced_at(
    word: BraidWord, t0: int | Fraction
) -> tuple[tuple[Fraction, ...], ...]:
    """Numeric specialization computed directly (fast path for long words)."""
    t0 = Fraction(t0)
    if t0 == 0:
        raise ValueError("t = 0 is outside the Laurent domain")
    n = word.strands
    rows = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    one_minus_t = 1 - t0
    t_inv = 1 / t0
    one_minus_t_inv = 1 - t_inv
    for letter in reversed(word.letters):
        i = abs(letter) - 1
        if letter > 0:
            for row in rows:
                ci, cj = row[i], row[i + 1]
                row[i] = ci * one_minus_t + cj
                row[i + 1] = ci * t0
        else:
            for row in rows:
                ci, cj = row[i], row[i + 1]
                row[i] = cj * t_inv
                row[i + 1] = ci + cj * one_minus_t_inv
    return tuple(tuple(row) for row in rows)


def burau_reduced_at(
    word: BraidWord, t0: int | Fraction
) -> tuple[tuple[Fraction, ...], ...]:
    u = burau_unreduced_at(word, t0)
    n = len(u)
    return tuple(
        tuple(u[i][j] - u[n - 1][j] for j in range(n - 1)) for i in range(n - 1)
    )


def is_torelli_shadow(word: BraidWord) -> bool:
    """True when the braid is pure and acts trivially on the homology of the
    double cover branched over the punctures (reduced Burau at t = -1)."""
    if not is_pure(word):
        return False
    n = word.strands
    m = burau_reduced_at(word, -1)
    return all(
        m[i][j] == (1 if i == j else 0) for i in range(n - 1) for j in range(n - 1)
    )


# -- serialization helpers -------------------------------------------------


def matrix_to_json(matrix: Matrix) -> list[list[list[list[int]]]]:
    """Rows of entries; each entry is a sorted list of [exponent, coeff]."""
    return [[[[e, c] for e, c in p.terms] for p in row] for row in matrix]


def format_matrix(matrix: Matrix) -> str:
    cells = [[str(p) for p in row] for row in matrix]
    width = max((len(s) for row in cells for s in row), default=1)
    return "\n".join(
        "[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells
    )
