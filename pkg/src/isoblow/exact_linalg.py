"""Exact rational matrices: determinant, minors, rank and Pfaffians.

Scalars are :class:`fractions.Fraction`; nothing here ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

Rat = Fraction


class DimensionError(ValueError):
    """Shape or index mismatch."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_rat(v) for v in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        self.rows = len(data)
        self.cols = cols
        self._e = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def hstack(cls, *blocks: "RationalMatrix") -> "RationalMatrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionError("hstack: row counts differ")
        return cls([sum((b._e[i] for b in blocks), ()) for i in range(rows)],
                   sum(b.cols for b in blocks))

    @classmethod
    def vstack(cls, *blocks: "RationalMatrix") -> "RationalMatrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionError("vstack: column counts differ")
        return cls([r for b in blocks for r in b._e], cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._e[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self._e)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._e), self.rows) if self.rows else RationalMatrix.zeros(self.cols, 0)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError("add: shapes differ")
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)], self.cols)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in r] for r in self._e], self.cols)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = as_rat(c)
        return RationalMatrix([[c * a for a in r] for r in self._e], self.cols)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError("matmul: inner dimensions differ")
        oc = list(zip(*other._e)) if other.rows else [()] * other.cols
        return RationalMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in oc] for r in self._e],
                              other.cols)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self._e[i][j] for j in col_idx] for i in row_idx], len(col_idx))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(self._e[i][j] == self._e[j][i]
                                        for i in range(self.rows) for j in range(i))

    def is_skew(self) -> bool:
        n = self.rows
        return self.is_square() and all(self._e[i][i] == 0 for i in range(n)) and all(
            self._e[i][j] == -self._e[j][i] for i in range(n) for j in range(i))


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; returns integer rows and the product of row scalings."""
    out, scale = [], 1
    for r in rows:
        den = 1
        for v in r:
            d = v.denominator
            if den % d:
                den = den * d // _gcd(den, d)
        out.append([int(v * den) for v in r])
        scale *= den
    return out, scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss_int(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - f * rk[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det(m: RationalMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise DimensionError(f"det needs a square matrix, got {m.rows}x{m.cols}")
    ints, scale = _integer_rows(m._e)
    return Fraction(_bareiss_int(ints), scale)


def det_cofactor(m: RationalMatrix) -> Fraction:
    """Naive first-row cofactor expansion; kept as an independent check of :func:`det`."""
    if not m.is_square():
        raise DimensionError("det_cofactor needs a square matrix")
    rows = [list(r) for r in m._e]

    def rec(rs: list[list[Fraction]]) -> Fraction:
        if not rs:
            return Fraction(1)
        total = Fraction(0)
        for j, v in enumerate(rs[0]):
            if v:
                sub = [r[:j] + r[j + 1:] for r in rs[1:]]
                total += (-1) ** j * v * rec(sub)
        return total

    return rec(rows)


def _check_indices(idx: Sequence[int], bound: int, what: str) -> None:
    if any(i < 0 or i >= bound for i in idx):
        raise DimensionError(f"{what} index out of range")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise DimensionError(f"{what} indices must be strictly increasing")


def minor(m: RationalMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Fraction:
    """Determinant of the submatrix on the given (0-based, increasing) rows and columns."""
    if len(row_idx) != len(col_idx):
        raise DimensionError("minor: row and column index lists differ in length")
    _check_indices(row_idx, m.rows, "row")
    _check_indices(col_idx, m.cols, "column")
    return det(m.submatrix(row_idx, col_idx))


def rank(m: RationalMatrix) -> int:
    ints, _ = _integer_rows(m._e)
    r, ncols = 0, m.cols
    rows = ints
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [x * p[c] - f * y for x, y in zip(rows[i], p)]
                g = 0
                for x in rows[i]:
                    g = _gcd(g, x)
                if g > 1:
                    rows[i] = [x // g for x in rows[i]]
        r += 1
        if r == len(rows):
            break
    return r


def _require_skew(s: RationalMatrix) -> None:
    if not s.is_square():
        raise DomainError("Pfaffian needs a square matrix")
    if s.rows % 2:
        raise DomainError("Pfaffian of an odd-size matrix is undefined here")
    if not s.is_skew():
        raise DomainError("matrix is not skew-symmetric (zero diagonal required)")


def _pf_rec(e: tuple[tuple[Fraction, ...], ...], idx: tuple[int, ...], memo: dict) -> Fraction:
    if not idx:
        return Fraction(1)
    hit = memo.get(idx)
    if hit is not None:
        return hit
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    for pos, j in enumerate(rest):
        v = e[first][j]
        if v:
            sub = rest[:pos] + rest[pos + 1:]
            term = v * _pf_rec(e, sub, memo)
            total += term if pos % 2 == 0 else -term
    memo[idx] = total
    return total


def pfaffian(s: RationalMatrix) -> Fraction:
    """Pfaffian by expansion along the first row (memoised over index subsets)."""
    _require_skew(s)
    return _pf_rec(s._e, tuple(range(s.rows)), {})


def pfaffian_submatrix(s: RationalMatrix, idx: Sequence[int]) -> Fraction:
    """Pfaffian of the principal submatrix on ``idx`` (0-based, increasing); empty -> 1."""
    idx = tuple(idx)
    if len(idx) % 2:
        raise DomainError("odd number of indices for a Pfaffian")
    _check_indices(idx, s.rows, "Pfaffian")
    _require_skew_any(s)
    return _pf_rec(s._e, idx, {})


def _require_skew_any(s: RationalMatrix) -> None:
    if not s.is_square() or not s.is_skew():
        raise DomainError("matrix is not skew-symmetric (zero diagonal required)")


def perm_sign(p: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def pfaffian_by_definition(s: RationalMatrix) -> Fraction:
    """Signed sum over permutations with sigma(2m-1) < sigma(2m) and sigma(2m-1) < sigma(2m+1).

    Exponential; used only as a test oracle for small sizes.
    """
    _require_skew(s)
    n = s.rows
    total = Fraction(0)
    for p in permutations(range(n)):
        if any(p[2 * m] > p[2 * m + 1] for m in range(n // 2)):
            continue
        if any(p[2 * m] > p[2 * m + 2] for m in range(n // 2 - 1)):
            continue
        term = Fraction(perm_sign(p))
        for m in range(n // 2):
            term *= s[p[2 * m], p[2 * m + 1]]
        total += term
    return total


def pfaffian_row_expansion(s: RationalMatrix, i: int) -> Fraction:
    """Expand the Pfaffian along row ``i`` (0-based); equals :func:`pfaffian`."""
    _require_skew(s)
    n = s.rows
    total = Fraction(0)
    for j in range(n):
        if j == i:
            continue
        rest = [k for k in range(n) if k not in (i, j)]
        # 1-based sign (-1)^(i+j+1+[i>j])
        sgn = (-1) ** ((i + 1) + (j + 1) + 1 + (1 if i > j else 0))
        total += sgn * s[i, j] * _pf_rec(s._e, tuple(rest), {})
    return total
