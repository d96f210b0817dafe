"""Exact polyhedral cones: double description, a brute-force oracle and Phase-I simplex."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .exact_linalg import DimensionError, DomainError, RationalMatrix, as_rat, rank

Vec = tuple[int, ...]


def primitive(v: Sequence) -> Vec:
    """Positive multiple of ``v`` with coprime integer entries (zero stays zero)."""
    fr = [as_rat(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g else tuple(ints)


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _nullspace(rows: list[list[Fraction]], d: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows @ x = 0}`` by reduced row echelon form."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * d
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def double_description(ineqs: Sequence[Sequence], dim: int) -> list[Vec]:
    """Extremal rays of the pointed cone ``{x : a.x >= 0 for a in ineqs}``.

    Incremental insertion with the combinatorial adjacency test.
    """
    a = [tuple(as_rat(x) for x in row) for row in ineqs]
    if any(len(row) != dim for row in a):
        raise DimensionError("inequality length does not match dimension")
    if rank(RationalMatrix([list(r) for r in a], dim)) < dim:
        raise DomainError("cone is not pointed")
    chosen: list[int] = []
    for i in range(len(a)):
        if rank(RationalMatrix([list(a[j]) for j in chosen + [i]], dim)) == len(chosen) + 1:
            chosen.append(i)
        if len(chosen) == dim:
            break
    # initial simplicial cone: r_i is the null vector of the other chosen rows, signed positive on a_i
    rays: list[tuple[Vec, frozenset[int]]] = []
    for i in chosen:
        others = [list(a[j]) for j in chosen if j != i]
        v = _nullspace(others, dim)[0] if others else [Fraction(int(t == 0)) for t in range(dim)]
        if _dot(a[i], v) < 0:
            v = [-x for x in v]
        rays.append((primitive(v), frozenset(j for j in chosen if j != i)))
    for k in (j for j in range(len(a)) if j not in chosen):
        row = a[k]
        vals = [_dot(row, r) for r, _ in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        new = [(rays[i][0], rays[i][1] | {k} if vals[i] == 0 else rays[i][1])
               for i in range(len(rays)) if vals[i] >= 0]
        for p in pos:
            for q in neg:
                common = rays[p][1] & rays[q][1]
                if len(common) < dim - 2:
                    continue
                if any(t not in (p, q) and common <= rays[t][1] for t in range(len(rays))):
                    continue
                v = [vals[p] * y - vals[q] * x for x, y in zip(rays[p][0], rays[q][0])]
                new.append((primitive(v), common | {k}))
        rays = new
    return sorted({r for r, _ in rays}, reverse=True)


def brute_force_rays(ineqs: Sequence[Sequence], dim: int) -> list[Vec]:
    """Oracle: every ``dim-1`` tight inequalities of rank ``dim-1`` give a candidate line; keep feasible sides."""
    a = [[as_rat(x) for x in row] for row in ineqs]
    found = set()
    for sub in combinations(range(len(a)), dim - 1):
        rows = [a[i] for i in sub]
        ns = _nullspace(rows, dim) if rows else [[Fraction(int(t == s)) for t in range(dim)] for s in range(dim)]
        if len(ns) != 1:
            continue
        for sign in (1, -1):
            v = [sign * x for x in ns[0]]
            if all(_dot(r, v) >= 0 for r in a):
                found.add(primitive(v))
    return sorted(found, reverse=True)


def lp_feasible(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A nonnegative solution of ``A x = b`` or ``None``; exact Phase-I simplex with Bland's rule."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        sgn = -1 if as_rat(b[i]) < 0 else 1
        rows.append([sgn * as_rat(x) for x in A[i]] + [Fraction(int(j == i)) for j in range(m)]
                    + [sgn * as_rat(b[i])])
    basis = [k + i for i in range(m)]
    ncols = k + m
    while True:
        red = [Fraction(int(j >= k)) - sum((rows[i][j] for i in range(m) if basis[i] >= k), Fraction(0))
               for j in range(ncols)]
        enter = next((j for j in range(ncols) if red[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        r = best[1]  # phase one is bounded below, so a pivot row always exists
        inv = 1 / rows[r][enter]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        basis[r] = enter
    if any(basis[i] >= k and rows[i][-1] != 0 for i in range(m)):
        return None
    x = [Fraction(0)] * k
    for i in range(m):
        if basis[i] < k:
            x[basis[i]] = rows[i][-1]
    return x


@dataclass(frozen=True)
class RationalCone:
    """A cone given by generating rays or by inequalities ``a.x >= 0``."""

    dim: int
    rays: tuple[Vec, ...] | None = None
    facets: tuple[Vec, ...] | None = None

    def __post_init__(self):
        if (self.rays is None) == (self.facets is None):
            raise DomainError("give exactly one of rays / facets")
        for name in ("rays", "facets"):
            vs = getattr(self, name)
            if vs is None:
                continue
            clean = []
            for v in vs:
                if len(v) != self.dim:
                    raise DimensionError(f"{name} vector {v} has wrong length")
                p = primitive(v)
                if any(p) and p not in clean:
                    clean.append(p)
            object.__setattr__(self, name, tuple(clean))

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence], dim: int) -> "RationalCone":
        return cls(dim, rays=tuple(tuple(r) for r in rays))

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence], dim: int) -> "RationalCone":
        return cls(dim, facets=tuple(tuple(f) for f in facets))

    def extremal_rays(self, method: str = "dd") -> list[Vec]:
        if self.facets is not None:
            algo = double_description if method == "dd" else brute_force_rays
            return algo(self.facets, self.dim)
        keep = []
        rays = list(self.rays)
        for i, r in enumerate(rays):
            others = rays[:i] + rays[i + 1:]
            if not others or not _combination(others, r, self.dim):
                keep.append(r)
        return sorted(keep, reverse=True)

    def contains(self, v: Sequence) -> bool:
        return in_cone(v, self)


def _combination(gens: Sequence[Vec], v: Sequence, dim: int) -> bool:
    A = [[g[i] for g in gens] for i in range(dim)]
    return lp_feasible(A, list(v)) is not None


def in_cone(v: Sequence, cone: RationalCone) -> bool:
    """Exact membership: facet test, or LP feasibility against the rays."""
    if len(v) != cone.dim:
        raise DimensionError("vector and cone dimension differ")
    if cone.facets is not None:
        return all(_dot(f, [as_rat(x) for x in v]) >= 0 for f in cone.facets)
    if not any(v):
        return True
    return bool(cone.rays) and _combination(cone.rays, v, cone.dim)


def cones_equal(a: RationalCone, b: RationalCone) -> bool:
    """Equal sets of primitive extremal rays (pointed cones)."""
    if a.dim != b.dim:
        raise DimensionError("cones live in different dimensions")
    return set(a.extremal_rays()) == set(b.extremal_rays())
