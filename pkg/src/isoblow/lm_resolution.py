"""Landsberg-Manivel maps ``[x00, X] -> rowspan(x00 I | X)``, their truncated inverses,
the centre ideals of the factorisation and the degree of the fibre curves."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal, Sequence

from .clifford import ExtElement, spinor_embed, pure_spinor
from .exact_linalg import DomainError, RationalMatrix, as_rat, minor, pfaffian_submatrix, rank
from .indexing import enum_weight_stratum
from .isotropic_models import (ChartCoords, IsotropicPoint, PluckerVector, chart_blocks, chart_layout,
                               chart_matrix_I, chart_matrix_O, plucker_embed, random_rational)

Family = Literal["LG", "OG"]


def _family(f: str) -> Family:
    f = f.upper()
    if f not in ("LG", "OG"):
        raise DomainError(f"unknown family {f!r}")
    return f  # type: ignore[return-value]


@dataclass(frozen=True)
class LMPoint:
    """Homogeneous point ``[x00, X]`` with ``X`` symmetric (LG) or skew (OG)."""

    x00: Fraction
    X: RationalMatrix
    family: Family = "LG"

    def __post_init__(self):
        object.__setattr__(self, "x00", as_rat(self.x00))
        object.__setattr__(self, "family", _family(self.family))
        if not self.X.is_square():
            raise DomainError("X must be square")
        if self.family == "LG" and not self.X.is_symmetric():
            raise DomainError("LG points need symmetric X")
        if self.family == "OG" and not self.X.is_skew():
            raise DomainError("OG points need skew X")
        if self.x00 == 0 and all(v == 0 for row in self.X.tolist() for v in row):
            raise DomainError("all homogeneous coordinates vanish")

    @property
    def n(self) -> int:
        return self.X.rows

    def coordinates(self) -> list[Fraction]:
        """``x00`` then the upper triangle (diagonal included for LG)."""
        off = 0 if self.family == "LG" else 1
        return [self.x00] + [self.X[i, j] for i in range(self.n) for j in range(i + off, self.n)]

    def projectively_equal(self, other: "LMPoint") -> bool:
        a, b = self.coordinates(), other.coordinates()
        if self.family != other.family or len(a) != len(b):
            return False
        i = _lead(a)
        return b[i] != 0 and all(x * b[i] == y * a[i] for x, y in zip(a, b))


def _lead(v: Sequence[Fraction]) -> int:
    return next(i for i, x in enumerate(v) if x != 0)


def random_lm_point(family: str, n: int, rng: random.Random, *, x00_nonzero: bool = True) -> LMPoint:
    family = _family(family)
    x = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if family == "OG" and i == j:
                continue
            v = random_rational(rng)
            x[i][j] = v
            x[j][i] = v if family == "LG" else -v
    x00 = random_rational(rng, nonzero=x00_nonzero)
    if x00 == 0 and all(v == 0 for r in x for v in r):
        x00 = Fraction(1)
    return LMPoint(x00, RationalMatrix(x, n), family)


def lm_eval(family: str, p: LMPoint) -> IsotropicPoint:
    family = _family(family)
    if family != p.family:
        raise DomainError("point and map belong to different families")
    n = p.n
    m = RationalMatrix.hstack(RationalMatrix.identity(n).scale(p.x00), p.X)
    if rank(m) < n:
        raise DomainError("base locus: x00 = 0 and X singular")
    return IsotropicPoint(m, family)


def weight_one_index(n: int, i: int, j: int) -> tuple[int, ...]:
    """Plücker index ``{1..n} - {i}`` plus column ``n + j`` (1-based)."""
    return tuple(sorted([c for c in range(1, n + 1) if c != i] + [n + j]))


def weight_one_signs(n: int) -> dict[tuple[int, int], int]:
    """``s(i, j)`` with ``P_{weight_one_index(i, j)} = s x00^(n-1) x_ij``, read off unit points."""
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = [[Fraction(0)] * n for _ in range(n)]
            x[i - 1][j - 1] = Fraction(1)
            m = RationalMatrix.hstack(RationalMatrix.identity(n), RationalMatrix(x, n))
            cols = [c - 1 for c in weight_one_index(n, i, j)]
            out[(i, j)] = int(minor(m, list(range(n)), cols))
    return out


def kal_project(v: PluckerVector | ExtElement) -> PluckerVector | ExtElement:
    """Keep Plücker weights 0 and 1, or spinor degrees 0 and 2."""
    if isinstance(v, PluckerVector):
        keep = set(enum_weight_stratum(v.n, 0)) | set(enum_weight_stratum(v.n, 1))
        return PluckerVector(v.n, {k: val for k, val in v.coords.items() if k in keep})
    return ExtElement(v.n, {k: val for k, val in v.terms.items() if len(k) in (0, 2)})


def lm_image(family: str, p: LMPoint) -> PluckerVector | ExtElement:
    """Plücker (LG) or spinor (OG) coordinates of ``lm_eval(p)``; the spinor needs ``x00 != 0``."""
    pt = lm_eval(family, p)
    if pt.family == "LG":
        return plucker_embed(pt)
    return spinor_embed(pt, 0)


def lm_invert(family: str, v: PluckerVector | ExtElement) -> LMPoint:
    family = _family(family)
    if family == "LG":
        if not isinstance(v, PluckerVector):
            raise DomainError("LG inversion expects Plücker coordinates")
        n = v.n
        p0 = v[tuple(range(1, n + 1))]
        if p0 == 0:
            raise DomainError("base locus: weight-0 coordinate vanishes")
        signs = weight_one_signs(n)
        x = [[signs[(i, j)] * v[weight_one_index(n, i, j)] for j in range(1, n + 1)] for i in range(1, n + 1)]
        return LMPoint(p0, RationalMatrix(x, n), "LG")
    if not isinstance(v, ExtElement):
        raise DomainError("OG inversion expects spinor coordinates")
    n = v.n
    c0 = v.coefficient(())
    if c0 == 0:
        raise DomainError("base locus: degree-0 spinor coordinate vanishes")
    # spinor of (x00 I | X) is 1 - sum_{i<j} (x_ij / x00) e*_ij + ...
    x = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x[i][j] = -v.coefficient((i + 1, j + 1))
            x[j][i] = -x[i][j]
    return LMPoint(c0, RationalMatrix(x, n), "OG")


# --------------------------------------------------------------------------- centre ideals

@dataclass(frozen=True)
class CenterIdealSpec:
    """``which='Y'``: rank-at-most-``l`` locus of ``X``; ``which='Z'``: ``(x00)`` plus the
    complementary generators.  Orthogonal ideals use sub-Pfaffians of size ``2(l+1)`` for ``Y_l``."""

    family: Family
    n: int
    which: Literal["Y", "Z"]
    l: int

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.family))
        if self.which not in ("Y", "Z"):
            raise DomainError("which must be 'Y' or 'Z'")
        top = self.n - 1 if self.family == "LG" else self.n // 2 - 1
        if not 0 <= self.l <= max(top, 0):
            raise DomainError(f"l out of range 0..{top}")

    def size(self) -> int | None:
        """Size of the minors / sub-Pfaffians involved (``None`` for ``Z_0``)."""
        m = self.n if self.family == "LG" else self.n // 2
        if self.which == "Y":
            return self.l + 1 if self.family == "LG" else 2 * (self.l + 1)
        if self.l == 0:
            return None
        return m - self.l + 1 if self.family == "LG" else 2 * (m - self.l + 1)


def center_generators(spec: CenterIdealSpec, p: LMPoint) -> list[Fraction]:
    if p.family != spec.family or p.n != spec.n:
        raise DomainError("point does not match the ideal")
    out = [p.x00] if spec.which == "Z" else []
    s = spec.size()
    if s is None or s > p.n:
        return out
    idx = list(combinations(range(p.n), s))
    if spec.family == "LG":
        out += [minor(p.X, list(r), list(c)) for r in idx for c in idx]
    else:
        out += [pfaffian_submatrix(p.X, list(r)) for r in idx]
    return out


# --------------------------------------------------------------------------- fibre curves

def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial, by Newton differences."""
    k = len(xs)
    coef = list(ys)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * k
        for d in range(k - 1):
            new[d + 1] += poly[d]
        for d in range(k):
            new[d] -= xs[i] * poly[d]
        new[0] += coef[i]
        poly = new
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


@dataclass(frozen=True)
class FiberDegree:
    family: Family
    n: int
    degree: int
    constant_one: tuple[tuple[int, ...], ...]
    table: tuple[tuple[tuple[int, ...], int], ...]


def fiber_coords_template(family: str, n: int, rng: random.Random | None = None) -> ChartCoords:
    """Random generic ``q`` (every ``b_i`` with ``i >= 2`` nonzero) for the chart at ``l = 0``."""
    rng = rng or random.Random(0)
    lay = chart_layout(family, n, 0)
    return ChartCoords(b={k: random_rational(rng, nonzero=True) for k in lay["b"]},
                       xi={k: random_rational(rng) for k in lay["xi"]})


def fiber_degree(family: str, n: int, q: ChartCoords, *, embedding: str | None = None) -> FiberDegree:
    """Degrees in ``b_1`` of every coordinate of the ``l = 0`` chart point, all other coordinates fixed by ``q``.

    ``embedding`` is ``'plucker'`` (default for LG) or ``'spinor'`` (default for OG).
    The value of ``q.b[1]`` is ignored; identically zero coordinates get degree -1.
    """
    family = _family(family)
    embedding = embedding or ("plucker" if family == "LG" else "spinor")
    if embedding == "spinor" and family != "OG":
        raise DomainError("spinor coordinates exist only for OG")
    samples = [Fraction(t) for t in range(n + 2)]
    values: dict[tuple[int, ...], list[Fraction]] = {}
    for t in samples:
        c = ChartCoords(a=q.a, b={**q.b, 1: t}, x=q.x, xi=q.xi, y=q.y)
        m = chart_matrix_I(n, 0, c) if family == "LG" else chart_matrix_O(n, 0, c)
        if embedding == "plucker":
            coords = plucker_embed(m).coords
        else:
            _, _, w = chart_blocks(m, 0)
            coords = pure_spinor(n, 0, w.T()).terms
            coords = {k: coords.get(k, Fraction(0)) for k in _even_subsets(n)}
        for k, v in coords.items():
            values.setdefault(k, []).append(v)
    table = []
    ones = []
    for k, ys in values.items():
        poly = _interpolate(samples[:-1], ys[:-1])
        # the spare sample certifies the degree bound
        check = sum((cf * samples[-1] ** d for d, cf in enumerate(poly)), Fraction(0))
        if check != ys[-1]:
            raise DomainError(f"coordinate {k} is not a polynomial of degree <= {n} in b_1")
        table.append((k, len(poly) - 1))
        if poly == [Fraction(1)]:
            ones.append(k)
    table.sort()
    return FiberDegree(family, n, max(d for _, d in table), tuple(sorted(ones)), tuple(table))


def _even_subsets(n: int) -> list[tuple[int, ...]]:
    return [s for k in range(0, n + 1, 2) for s in combinations(range(1, n + 1), k)]
