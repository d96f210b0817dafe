"""Exterior algebra on V*, the spinor action of V + V*, and pure spinors of isotropic graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact_linalg import DomainError, RationalMatrix, as_rat, pfaffian_submatrix

Subset = tuple[int, ...]


def _sort_sign(seq: Sequence[int]) -> tuple[int, Subset]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, ()
    inv = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])
    return (-1 if inv % 2 else 1), tuple(sorted(s))


@dataclass(frozen=True)
class ExtElement:
    """Element of the exterior algebra on ``e*_1..e*_n``: sorted subset -> coefficient."""

    n: int
    terms: Mapping[Subset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): as_rat(v) for k, v in self.terms.items() if v != 0}
        for k in clean:
            if list(k) != sorted(set(k)) or any(i < 1 or i > self.n for i in k):
                raise DomainError(f"bad exterior monomial {k}")
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    @classmethod
    def monomial(cls, n: int, subset: Iterable[int], coeff=1) -> "ExtElement":
        sgn, key = _sort_sign(tuple(subset))
        return cls(n, {key: sgn * as_rat(coeff)} if sgn else {})

    @classmethod
    def one(cls, n: int) -> "ExtElement":
        return cls(n, {(): Fraction(1)})

    def __add__(self, other: "ExtElement") -> "ExtElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ExtElement(self.n, out)

    def __neg__(self) -> "ExtElement":
        return ExtElement(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def scale(self, c) -> "ExtElement":
        c = as_rat(c)
        return ExtElement(self.n, {k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def normalized(self) -> "ExtElement":
        """Scale so the first term (by degree, then lexicographic) has coefficient 1."""
        if not self.terms:
            return self
        lead = next(iter(self.terms.values()))
        return self.scale(1 / lead)

    def projectively_equal(self, other: "ExtElement") -> bool:
        return self.n == other.n and self.normalized().terms == other.normalized().terms

    def coefficient(self, subset: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(subset), Fraction(0))


def wedge_left(alpha: Sequence, phi: ExtElement) -> ExtElement:
    """``alpha ∧ phi`` for ``alpha = sum_i alpha[i-1] e*_i``."""
    out: dict[Subset, Fraction] = {}
    for i, c in enumerate(alpha, start=1):
        c = as_rat(c)
        if not c:
            continue
        for k, v in phi.terms.items():
            if i in k:
                continue
            pos = sum(1 for j in k if j < i)
            key = tuple(sorted(k + (i,)))
            out[key] = out.get(key, Fraction(0)) + (-1) ** pos * c * v
    return ExtElement(phi.n, out)


def contract(v: Sequence, phi: ExtElement) -> ExtElement:
    """Interior product ``iota_v phi`` with ``iota_{e_i}(e*_j) = delta_ij``."""
    out: dict[Subset, Fraction] = {}
    for i, c in enumerate(v, start=1):
        c = as_rat(c)
        if not c:
            continue
        for k, val in phi.terms.items():
            if i not in k:
                continue
            pos = k.index(i)
            key = k[:pos] + k[pos + 1:]
            out[key] = out.get(key, Fraction(0)) + (-1) ** pos * c * val
    return ExtElement(phi.n, out)


@dataclass(frozen=True)
class CliffordVector:
    """``x = (v, alpha)`` in ``V + V*``, stored as coordinate tuples."""

    v: tuple[Fraction, ...]
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.v) != len(self.alpha):
            raise DomainError("v and alpha must have the same length")
        object.__setattr__(self, "v", tuple(as_rat(t) for t in self.v))
        object.__setattr__(self, "alpha", tuple(as_rat(t) for t in self.alpha))

    @classmethod
    def from_row(cls, row: Sequence) -> "CliffordVector":
        n = len(row) // 2
        return cls(tuple(row[:n]), tuple(row[n:]))

    def quadratic(self) -> Fraction:
        return sum((a * b for a, b in zip(self.v, self.alpha)), Fraction(0))

    def __add__(self, other: "CliffordVector") -> "CliffordVector":
        return CliffordVector(tuple(a + b for a, b in zip(self.v, other.v)),
                              tuple(a + b for a, b in zip(self.alpha, other.alpha)))


def clifford_act(x: CliffordVector, phi: ExtElement) -> ExtElement:
    return wedge_left(x.alpha, phi) + contract(x.v, phi)


def _graph_rows(n: int, l: int, a: RationalMatrix) -> list[CliffordVector]:
    """Spanning vectors ``g_p + A(g_p)`` of ``L_A``.

    ``g_p`` is ``e*_p`` (p <= l) or ``e_p`` (p > l); ``A`` maps ``g_p`` to
    ``sum_q A[q, p] h_q`` with ``h_q`` equal to ``e_q`` (q <= l) or ``e*_q`` (q > l).
    A chart matrix with blocks ``M = (Z X; -X^T W)`` therefore has ``A = M^T = -M``.
    """
    rows = []
    for p in range(n):
        v = [Fraction(0)] * n
        al = [Fraction(0)] * n
        if p < l:
            al[p] = Fraction(1)
        else:
            v[p] = Fraction(1)
        for q in range(n):
            if q < l:
                v[q] += a[q, p]
            else:
                al[q] += a[q, p]
        rows.append(CliffordVector(tuple(v), tuple(al)))
    return rows


def pure_spinor(n: int, l: int, a: RationalMatrix) -> ExtElement:
    """Pure spinor of ``L_A`` in the chart around ``L_{1..l}``.

    Sum over ``I ⊂ {1..l}``, ``J ⊂ {l+1..n}`` with ``|I|+|J|`` even of
    ``Pf(A_{IJ}) e_I ∧ e*_J ∧ e*_1 ∧ ... ∧ e*_l`` where each ``e_i`` acts on the
    exterior algebra of V* by contraction (innermost factor first).
    """
    if not a.is_square() or a.rows != n:
        raise DomainError("A must be n x n")
    if not a.is_skew():
        raise DomainError("A must be skew-symmetric")
    if not 0 <= l <= n:
        raise DomainError("l out of range")
    base = tuple(range(1, l + 1))
    total = ExtElement(n, {})
    for t in range(0, l + 1):
        for s in range(0, n - l + 1):
            if (s + t) % 2:
                continue
            for I in combinations(range(1, l + 1), t):
                for J in combinations(range(l + 1, n + 1), s):
                    pf = pfaffian_submatrix(a, [i - 1 for i in I + J])
                    if not pf:
                        continue
                    term = ExtElement.monomial(n, J + base, pf)
                    for i in reversed(I):
                        term = contract(_unit(n, i), term)
                    total = total + term
    return total


def _unit(n: int, i: int) -> list[int]:
    u = [0] * n
    u[i - 1] = 1
    return u


def annihilation_check(n: int, l: int, a: RationalMatrix, *, force: bool = False) -> bool:
    """True iff every spanning vector of ``L_A`` kills ``pure_spinor(n, l, A)``.

    ``force`` skips the skewness check on ``A`` (the spinor is then built from the
    skew part) so that non-skew perturbations can be probed.
    """
    if force and not a.is_skew():
        skew = RationalMatrix([[(a[i, j] - a[j, i]) / 2 for j in range(n)] for i in range(n)])
        phi = pure_spinor(n, l, skew)
    else:
        phi = pure_spinor(n, l, a)
    return all(clifford_act(r, phi).is_zero() for r in _graph_rows(n, l, a))


def chart_skew_matrix(m: RationalMatrix, l: int) -> RationalMatrix:
    """The matrix ``A`` with ``row span(m) = L_A`` in the chart around ``L_{1..l}``."""
    from .isotropic_models import chart_normal_form

    n = m.rows
    nf = chart_normal_form(m, l)
    h_cols = list(range(l)) + [n + q for q in range(l, n)]
    a = nf.submatrix(range(n), h_cols).T()
    if not a.is_skew():
        raise DomainError("point is not isotropic for Q: chart matrix is not skew")
    return a


def spinor_embed(p, l: int = 0) -> ExtElement:
    """Spinor coordinates of an orthogonal point lying in the chart around ``L_{1..l}``, normalised."""
    m = getattr(p, "matrix", p)
    return pure_spinor(m.rows, l, chart_skew_matrix(m, l)).normalized()
