"""Points of LG(n,2n) and OG+(n,2n), Plücker coordinates, coordinate charts and
the generators of the weight-stratum ideals on a chart.

Column ``c`` (1-based) of an ``n x 2n`` matrix is ``e_c`` for ``c <= n`` and
``e*_{c-n}`` otherwise.  Chart matrices are written in exactly this order:
``(Z-block | e_{l+1..n} | e*_{1..l} | e*_{l+1..n})``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal, Mapping, Sequence

from .exact_linalg import (DomainError, RationalMatrix, _bareiss_int, _integer_rows, as_rat,
                           minor, pfaffian_submatrix, rank)
from .indexing import PluckerIndex, Type2Tuple, enum_plucker, enum_weight_stratum, weight_index

Family = Literal["LG", "OG"]


def _family(f: str) -> Family:
    f = f.upper()
    if f not in ("LG", "OG"):
        raise DomainError(f"unknown family {f!r}")
    return f  # type: ignore[return-value]


# --------------------------------------------------------------------------- forms

def omega(r1: Sequence[Fraction], r2: Sequence[Fraction]) -> Fraction:
    """Symplectic form ``alpha2(v1) - alpha1(v2)`` on rows ``(v | alpha)``."""
    n = len(r1) // 2
    return sum((r2[n + i] * r1[i] - r1[n + i] * r2[i] for i in range(n)), Fraction(0))


def quad(r: Sequence[Fraction]) -> Fraction:
    """``Q(v, alpha) = alpha(v)``."""
    n = len(r) // 2
    return sum((r[n + i] * r[i] for i in range(n)), Fraction(0))


def polar(r1: Sequence[Fraction], r2: Sequence[Fraction]) -> Fraction:
    """Polarisation ``B = alpha1(v2) + alpha2(v1)`` of ``Q``."""
    n = len(r1) // 2
    return sum((r1[n + i] * r2[i] + r2[n + i] * r1[i] for i in range(n)), Fraction(0))


@dataclass(frozen=True)
class IsotropicPoint:
    """Row span of an ``n x 2n`` rational matrix, tagged with the family it should lie in."""

    matrix: RationalMatrix
    family: Family = "LG"

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.family))
        if self.matrix.cols != 2 * self.matrix.rows:
            raise DomainError("an isotropic point is an n x 2n matrix")

    @property
    def n(self) -> int:
        return self.matrix.rows


def is_isotropic(p: IsotropicPoint) -> bool:
    rows = [p.matrix.row(i) for i in range(p.n)]
    if p.family == "LG":
        return all(omega(rows[i], rows[j]) == 0 for i in range(p.n) for j in range(i + 1, p.n))
    return all(quad(r) == 0 for r in rows) and all(
        polar(rows[i], rows[j]) == 0 for i in range(p.n) for j in range(i + 1, p.n))


# --------------------------------------------------------------------------- Plücker

@dataclass(frozen=True)
class PluckerVector:
    """Projective point given by coordinates on Plücker indices (lexicographic order)."""

    n: int
    coords: Mapping[PluckerIndex, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coords", dict(sorted((tuple(k), as_rat(v)) for k, v in self.coords.items())))

    def __getitem__(self, idx: Iterable[int]) -> Fraction:
        return self.coords.get(tuple(idx), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords.values())

    def support(self) -> list[PluckerIndex]:
        return [k for k, v in self.coords.items() if v != 0]

    def normalized(self) -> "PluckerVector":
        lead = next((v for v in self.coords.values() if v != 0), None)
        if lead is None:
            return self
        return PluckerVector(self.n, {k: v / lead for k, v in self.coords.items()})

    def projectively_equal(self, other: "PluckerVector") -> bool:
        a, b = self.normalized(), other.normalized()
        keys = set(a.coords) | set(b.coords)
        return all(a[k] == b[k] for k in keys)


def plucker_embed(p: IsotropicPoint | RationalMatrix, indices: Iterable[PluckerIndex] | None = None) -> PluckerVector:
    """All maximal minors ``P_I`` (columns taken in increasing order, no extra sign)."""
    m = p.matrix if isinstance(p, IsotropicPoint) else p
    n = m.rows
    if rank(m) < n:
        raise DomainError("rank-deficient matrix has no Plücker point")
    ints, scale = _integer_rows([m.row(i) for i in range(n)])
    coords = {}
    for idx in (enum_plucker(n) if indices is None else indices):
        sub = [[r[c - 1] for c in idx] for r in ints]
        coords[tuple(idx)] = Fraction(_bareiss_int(sub), scale)
    return PluckerVector(n, coords)


def weight_truncate(pv: PluckerVector, k: int) -> PluckerVector:
    """Restriction to the weight-``k`` indices (may be identically zero)."""
    if not 0 <= k <= pv.n:
        raise DomainError(f"weight {k} out of range")
    return PluckerVector(pv.n, {i: pv[i] for i in enum_weight_stratum(pv.n, k)})


def plucker_sign(n: int, k: int) -> int:
    """Sign relating ``P_{I_k}`` on any Type-I chart to its monomial: ``(-1)^(k(n-k))``."""
    return -1 if (k * (n - k)) % 2 else 1


# --------------------------------------------------------------------------- chart coordinates

@dataclass(frozen=True)
class ChartCoords:
    """Named coordinate values for one chart.

    ``a``/``b`` are keyed by subscript, ``x`` by ``(i, j)`` with ``i <= l < j``,
    ``xi`` by ``(i, j)`` with ``i < j``, ``y`` by subscript (Type-II only).
    """

    a: Mapping[int, Fraction] = field(default_factory=dict)
    b: Mapping[int, Fraction] = field(default_factory=dict)
    x: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    xi: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    y: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("a", "b", "y"):
            object.__setattr__(self, name, {int(k): as_rat(v) for k, v in getattr(self, name).items()})
        for name in ("x", "xi"):
            object.__setattr__(self, name, {(int(k[0]), int(k[1])): as_rat(v) for k, v in getattr(self, name).items()})

    def replace(self, group: str, key, value) -> "ChartCoords":
        groups = {g: dict(getattr(self, g)) for g in ("a", "b", "x", "xi", "y")}
        if key not in groups[group]:
            raise DomainError(f"{group}{key} is not a coordinate of this chart")
        groups[group][key] = as_rat(value)
        return ChartCoords(**groups)

    def names(self) -> list[tuple[str, object]]:
        return ([("a", k) for k in sorted(self.a)] + [("b", k) for k in sorted(self.b)]
                + [("x", k) for k in sorted(self.x)] + [("xi", k) for k in sorted(self.xi)]
                + [("y", k) for k in sorted(self.y)])


def _check_tau(tau: Type2Tuple | None, n: int, l: int) -> Type2Tuple:
    if tau is None:
        return Type2Tuple((), (), n, l)
    if (tau.n, tau.l) != (n, l):
        raise DomainError("Type-II label was built for a different (n, l)")
    return tau


def chart_layout(family: str, n: int, l: int, tau: Type2Tuple | None = None) -> dict[str, list]:
    """Coordinate names of a chart, grouped as in :class:`ChartCoords`."""
    family = _family(family)
    if not 0 <= l <= n:
        raise DomainError(f"l={l} out of range 0..{n}")
    x = [(i, j) for i in range(1, l + 1) for j in range(l + 1, n + 1)]
    if family == "LG":
        tau = _check_tau(tau, n, l)
        skip_a = {n - l + i + 1 for i in tau.plus}
        skip_b = {i + 1 for i in tau.minus}
        a = [n - l + i for i in range(1, l + 1) if n - l + i not in skip_a]
        b = [i for i in range(l + 1, n + 1) if i not in skip_b]
        drop = {(l - k, l - k + 1) for k in tau.plus} | {(k, k + 1) for k in tau.minus}
        xi = [(i, j) for i in range(1, l + 1) for j in range(i + 1, l + 1)]
        xi += [(i, j) for i in range(l + 1, n + 1) for j in range(i + 1, n + 1)]
        xi = [p for p in xi if p not in drop]
        y = sorted(v for k in tau.entries for v in (k, k + 1))
        return {"a": a, "b": b, "x": x, "xi": xi, "y": y}
    if tau is not None and not tau.is_empty():
        raise DomainError("orthogonal charts have no Type-II variant")
    if l % 2:
        raise DomainError("orthogonal charts need even l")
    m, h = n // 2, l // 2
    a = [m - h + i for i in range(1, h + 1)]
    b = list(range(h + 1, m + 1))
    xi = []
    for k in range(1, h):
        xi += [(j, l - 2 * k + 1) for j in range(1, l - 2 * k + 1)]
        xi += [(j, l - 2 * k + 2) for j in range(1, l - 2 * k + 1)]
    for k in range(h + 1, m + 1):
        xi += [(2 * k - 1, j) for j in range(2 * k + 1, n + 1)]
        xi += [(2 * k, j) for j in range(2 * k + 1, n + 1)]
    return {"a": a, "b": b, "x": x, "xi": sorted(xi), "y": []}


def chart_dimension(family: str, n: int) -> int:
    return n * (n + 1) // 2 if _family(family) == "LG" else n * (n - 1) // 2


def random_rational(rng: random.Random, *, nonzero: bool = False) -> Fraction:
    """Numerator in -3..3, denominator in 1..3."""
    while True:
        v = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if v or not nonzero:
            return v


def random_chart_coords(family: str, n: int, l: int, tau: Type2Tuple | None = None,
                        rng: random.Random | None = None, *, generic: bool = False) -> ChartCoords:
    """Random coordinates; ``generic`` forces every a, b nonzero. Type-II ``y`` pairs avoid ``y_k y_{k+1} = 1``."""
    rng = rng or random.Random(0)
    lay = chart_layout(family, n, l, tau)
    vals = {g: {k: random_rational(rng, nonzero=generic and g in "ab") for k in lay[g]} for g in ("a", "b", "x", "xi")}
    y: dict[int, Fraction] = {}
    if tau is not None:
        for k in tau.entries:
            while True:
                yk, yk1 = random_rational(rng), random_rational(rng)
                if yk * yk1 != 1:
                    break
            y[k], y[k + 1] = yk, yk1
    return ChartCoords(vals["a"], vals["b"], vals["x"], vals["xi"], y)


class CoordinateError(DomainError):
    """Chart coordinates do not match the chart's layout."""

    def __init__(self, group: str, message: str):
        super().__init__(message)
        self.group = group


def _validate(c: ChartCoords, lay: dict[str, list]) -> None:
    for g in ("a", "b", "x", "xi", "y"):
        have, want = set(getattr(c, g)), set(lay[g])
        if have != want:
            missing, extra = sorted(want - have), sorted(have - want)
            raise CoordinateError(g, f"coordinate group {g!r}: missing {missing}, unexpected {extra}")


def _zeros(r: int, c: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * c for _ in range(r)]


def _add_scaled(dst: list[list[Fraction]], src: list[list[Fraction]], c: Fraction) -> None:
    if not c:
        return
    for i, row in enumerate(src):
        for j, v in enumerate(row):
            if v:
                dst[i][j] += c * v


def _outer(u: list[Fraction]) -> list[list[Fraction]]:
    return [[p * q for q in u] for p in u]


def _assemble(n: int, l: int, z: list[list[Fraction]], x: Mapping, w: list[list[Fraction]]) -> RationalMatrix:
    rows = []
    for i in range(1, l + 1):
        row = list(z[i - 1]) + [Fraction(0)] * (n - l) + [Fraction(int(i == j)) for j in range(1, l + 1)]
        row += [x[(i, j)] for j in range(l + 1, n + 1)]
        rows.append(row)
    for al in range(l + 1, n + 1):
        row = [-x[(i, al)] for i in range(1, l + 1)] + [Fraction(int(al == j)) for j in range(l + 1, n + 1)]
        row += [Fraction(0)] * l + list(w[al - l - 1])
        rows.append(row)
    return RationalMatrix(rows, 2 * n)


def _pair_block(yk: Fraction, yk1: Fraction, xi_rows: list[list[Fraction]], upper: bool) -> list[list[Fraction]]:
    """``[[Xi^T Y^-1 Xi, Xi^T], [Xi, Y]]`` (upper=True) or ``[[Y, Xi], [Xi^T, Xi^T Y^-1 Xi]]``."""
    d = yk * yk1 - 1
    if d == 0:
        raise DomainError("1 - y_k y_(k+1) vanishes: point lies outside the Type-II chart")
    inv = [[yk1 / d, -1 / d], [-1 / d, yk / d]]
    m = len(xi_rows[0])
    quadf = [[sum((xi_rows[p][i] * inv[p][q] * xi_rows[q][j] for p in range(2) for q in range(2)), Fraction(0))
              for j in range(m)] for i in range(m)]
    y = [[yk, Fraction(1)], [Fraction(1), yk1]]
    if upper:
        top = [quadf[i] + [xi_rows[0][i], xi_rows[1][i]] for i in range(m)]
        bot = [list(xi_rows[p]) + y[p] for p in range(2)]
        return top + bot
    top = [y[p] + list(xi_rows[p]) for p in range(2)]
    bot = [[xi_rows[0][i], xi_rows[1][i]] + quadf[i] for i in range(m)]
    return top + bot


def chart_matrix_I(n: int, l: int, c: ChartCoords) -> RationalMatrix:
    return chart_matrix_II(n, l, None, c)


def chart_matrix_II(n: int, l: int, tau: Type2Tuple | None, c: ChartCoords) -> RationalMatrix:
    lay = chart_layout("LG", n, l, tau)
    _validate(c, lay)
    tau = _check_tau(tau, n, l)
    plus, minus = set(tau.plus), set(tau.minus)
    skip_plus = {k + 1 for k in plus}
    skip_minus = {k + 1 for k in minus}

    z = _zeros(l, l)
    coef = Fraction(1)
    for k in range(1, l + 1):
        if k not in skip_plus:
            coef *= c.a[n - l + k]
        if k in skip_plus:
            continue
        if k in plus:
            width = l - k - 1
            xi_rows = [[c.xi[(j, l - k)] for j in range(1, width + 1)],
                       [c.xi[(j, l - k + 1)] for j in range(1, width + 1)]]
            blk = _pair_block(c.y[k], c.y[k + 1], xi_rows, upper=True)
            om = _zeros(l, l)
            for i in range(width + 2):
                for j in range(width + 2):
                    om[i][j] = blk[i][j]
        else:
            pivot = l - k + 1
            u = [c.xi[(j, pivot)] for j in range(1, pivot)] + [Fraction(1)] + [Fraction(0)] * (l - pivot)
            om = _outer(u)
        _add_scaled(z, om, coef)

    w = _zeros(n - l, n - l)
    coef = Fraction(1)
    for k in range(l + 1, n + 1):
        if k not in skip_minus:
            coef *= c.b[k]
        if k in skip_minus:
            continue
        off = k - l - 1
        if k in minus:
            xi_rows = [[c.xi[(k, j)] for j in range(k + 2, n + 1)],
                       [c.xi[(k + 1, j)] for j in range(k + 2, n + 1)]]
            blk = _pair_block(c.y[k], c.y[k + 1], xi_rows, upper=False)
            om = _zeros(n - l, n - l)
            for i, row in enumerate(blk):
                for j, v in enumerate(row):
                    om[off + i][off + j] = v
        else:
            u = [Fraction(0)] * off + [Fraction(1)] + [c.xi[(k, j)] for j in range(k + 1, n + 1)]
            om = _outer(u)
        _add_scaled(w, om, coef)
    return _assemble(n, l, z, c.x, w)


def chart_matrix_O(n: int, l: int, c: ChartCoords) -> RationalMatrix:
    lay = chart_layout("OG", n, l)
    _validate(c, lay)
    m, h = n // 2, l // 2
    J = [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]

    def sandwich(xi_rows):  # Xi^T J Xi
        w_ = len(xi_rows[0])
        return [[xi_rows[0][i] * xi_rows[1][j] - xi_rows[1][i] * xi_rows[0][j] for j in range(w_)]
                for i in range(w_)]

    z = _zeros(l, l)
    coef = Fraction(1)
    for k in range(1, h + 1):
        coef *= c.a[m - h + k]
        width = l - 2 * k
        r1, r2 = l - 2 * k + 1, l - 2 * k + 2
        xi_rows = [[c.xi[(j, r1)] for j in range(1, width + 1)], [c.xi[(j, r2)] for j in range(1, width + 1)]]
        om = _zeros(l, l)
        s = sandwich(xi_rows) if width else []
        for i in range(width):
            for j in range(width):
                om[i][j] = s[i][j]
            om[i][width], om[i][width + 1] = -xi_rows[0][i], -xi_rows[1][i]
            om[width][i], om[width + 1][i] = xi_rows[0][i], xi_rows[1][i]
        for p in range(2):
            for q in range(2):
                om[width + p][width + q] = J[p][q]
        _add_scaled(z, om, coef)

    w = _zeros(n - l, n - l)
    coef = Fraction(1)
    for k in range(h + 1, m + 1):
        coef *= c.b[k]
        off = 2 * k - l - 2
        cols = list(range(2 * k + 1, n + 1))
        xi_rows = [[c.xi[(2 * k - 1, j)] for j in cols], [c.xi[(2 * k, j)] for j in cols]]
        om = _zeros(n - l, n - l)
        for p in range(2):
            for q in range(2):
                om[off + p][off + q] = J[p][q]
        s = sandwich(xi_rows) if cols else []
        for i in range(len(cols)):
            for p in range(2):
                om[off + p][off + 2 + i] = xi_rows[p][i]
                om[off + 2 + i][off + p] = -xi_rows[p][i]
            for j in range(len(cols)):
                om[off + 2 + i][off + 2 + j] = s[i][j]
        _add_scaled(w, om, coef)
    return _assemble(n, l, z, c.x, w)


def chart_point_I(n: int, l: int, c: ChartCoords) -> IsotropicPoint:
    return IsotropicPoint(chart_matrix_I(n, l, c), "LG")


def chart_point_II(n: int, l: int, tau: Type2Tuple, c: ChartCoords) -> IsotropicPoint:
    return IsotropicPoint(chart_matrix_II(n, l, tau, c), "LG")


def chart_point_O(n: int, l: int, c: ChartCoords) -> IsotropicPoint:
    return IsotropicPoint(chart_matrix_O(n, l, c), "OG")


def chart_blocks(m: RationalMatrix, l: int) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """``(Z, X, W)`` read off a matrix in chart layout around ``L_{1..l}``."""
    n = m.rows
    z = m.submatrix(range(l), range(l))
    x = m.submatrix(range(l), range(n + l, 2 * n))
    w = m.submatrix(range(l, n), range(n + l, 2 * n))
    return z, x, w


def chart_normal_form(m: RationalMatrix, l: int) -> RationalMatrix:
    """Left-multiply so the columns of ``e*_1..e*_l, e_{l+1}..e_n`` form the identity.

    Raises :class:`DomainError` if the point is not in the chart around ``L_{1..l}``.
    """
    n = m.rows
    pivots = [n + i for i in range(l)] + list(range(l, n))
    square = m.submatrix(range(n), pivots)
    if rank(square) < n:
        raise DomainError(f"point lies outside the chart around L_(1..{l})")
    rows = [list(m.row(i)) for i in range(n)]
    for col_pos, col in enumerate(pivots):
        piv = next(i for i in range(col_pos, n) if rows[i][col] != 0)
        rows[col_pos], rows[piv] = rows[piv], rows[col_pos]
        pr = rows[col_pos]
        inv = 1 / pr[col]
        rows[col_pos] = pr = [v * inv for v in pr]
        for i in range(n):
            if i != col_pos and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    # row p now carries the pivot in column pivots[p]
    return RationalMatrix(rows, 2 * n)


# --------------------------------------------------------------------------- pullback monomials and ideals

def monomial_I_k(n: int, l: int, k: int, c: ChartCoords) -> Fraction:
    """Closed form of ``P_{I_k}`` on the Type-I chart, without the sign ``(-1)^(k(n-k))``."""
    out = Fraction(1)
    if k < l:
        for i in range(1, l - k + 1):
            out *= c.a[n - l + i] ** (l - k + 1 - i)
    elif k > l:
        for i in range(l + 1, k + 1):
            out *= c.b[i] ** (k + 1 - i)
    return out


def pullback_monomial(n: int, l: int, k: int, c: ChartCoords) -> Fraction:
    """``P_{I_k}`` at the Type-I chart point; asserts the closed-form monomial identity."""
    if not (0 <= k <= n and 0 <= l <= n):
        raise DomainError("need 0 <= k, l <= n")
    m = chart_matrix_I(n, l, c)
    val = minor(m, list(range(n)), [i - 1 for i in weight_index(n, k)])
    expected = plucker_sign(n, k) * monomial_I_k(n, l, k, c)
    assert val == expected, f"P_I_{k} = {val}, expected {expected} (n={n}, l={l})"
    return val


@dataclass(frozen=True)
class IdealSpec:
    """Generators of the weight-``k`` stratum ideal restricted to the chart around ``L_{1..l}``."""

    family: Family
    n: int
    l: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.family))
        if not 0 <= self.l <= self.n:
            raise DomainError("l out of range")
        top = self.n if self.family == "LG" else self.n // 2
        if not 0 <= self.k <= top:
            raise DomainError("k out of range")

    def descriptors(self) -> list[tuple]:
        """``('one',)``, ``('minor', block, rows, cols)`` or ``('pf', block, idx)``; indices 1-based within the block."""
        n, l, k = self.n, self.l, self.k
        if self.family == "LG":
            if k == l:
                return [("one",)]
            if k < l:
                s = l - k
                return [("minor", "Z", r, c) for r in combinations(range(1, l + 1), s)
                        for c in combinations(range(1, l + 1), s)]
            s = k - l
            return [("minor", "W", r, c) for r in combinations(range(1, n - l + 1), s)
                    for c in combinations(range(1, n - l + 1), s)]
        if 2 * k == l:
            return [("one",)]
        if 2 * k < l:
            return [("pf", "Z", idx) for idx in combinations(range(1, l + 1), l - 2 * k)]
        return [("pf", "W", idx) for idx in combinations(range(1, n - l + 1), 2 * k - l)]


def ideal_generators(spec: IdealSpec, point: ChartCoords | IsotropicPoint | RationalMatrix) -> list[Fraction]:
    """Evaluate every generator of ``spec`` at a chart point (Type-I coordinates or a chart-layout matrix)."""
    if isinstance(point, ChartCoords):
        m = chart_matrix_I(spec.n, spec.l, point) if spec.family == "LG" else chart_matrix_O(spec.n, spec.l, point)
    elif isinstance(point, IsotropicPoint):
        m = point.matrix
    else:
        m = point
    z, _, w = chart_blocks(m, spec.l)
    out = []
    for d in spec.descriptors():
        if d[0] == "one":
            out.append(Fraction(1))
        elif d[0] == "minor":
            blk = z if d[1] == "Z" else w
            out.append(minor(blk, [i - 1 for i in d[2]], [j - 1 for j in d[3]]))
        else:
            blk = z if d[1] == "Z" else w
            out.append(pfaffian_submatrix(blk, [i - 1 for i in d[2]]))
    return out


def divisor_stratum(n: int, l: int, side: str, index: int) -> int:
    """Stratum ``k`` whose generators vanish on ``{a_index = 0}`` (side 'a') or ``{b_index = 0}`` (side 'b')."""
    return n - index if side == "a" else index
