"""Picard lattice calculus for the blow-ups of LG(n,2n) and OG+(n,2n).

Classes are integer vectors over the basis ``[H, D1+, ..., D1-, ...]``.  Nef
questions are asked in the coordinates ``(h, a_1.., b_1..)`` of
``D = h H + sum a_i Delta_i^- + sum b_j Delta_j^+``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .exact_linalg import DomainError
from .polyhedra import RationalCone, Vec, cones_equal, double_description, in_cone

Family = Literal["LG", "OG"]


class ConsistencyError(AssertionError):
    """A computed table contradicts a property the classes must satisfy."""


def _family(f: str) -> Family:
    f = f.upper()
    if f not in ("LG", "OG"):
        raise DomainError(f"unknown family {f!r}")
    return f  # type: ignore[return-value]


@dataclass(frozen=True)
class PicardBasis:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.family))
        lo = 1 if self.family == "LG" else 2
        if self.n < lo:
            raise DomainError(f"{self.family} needs n >= {lo}")

    @property
    def top(self) -> int:
        """``M``: n for LG, floor(n/2) for OG (index of the expanded divisors D_M)."""
        return self.n if self.family == "LG" else self.n // 2

    @property
    def plus_range(self) -> int:
        return self.n - 1 if self.family == "LG" else self.n // 2 - 1

    @property
    def minus_range(self) -> int:
        return self.n - 1 if self.family == "LG" else (self.n - 1) // 2

    @property
    def labels(self) -> list[str]:
        return (["H"] + [f"D{i}+" for i in range(1, self.plus_range + 1)]
                + [f"D{i}-" for i in range(1, self.minus_range + 1)])

    @property
    def rank(self) -> int:
        return 1 + self.plus_range + self.minus_range

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def has(self, sign: str, i: int) -> bool:
        top = self.plus_range if sign == "+" else self.minus_range
        return 1 <= i <= top


@dataclass(frozen=True)
class DivClass:
    basis: PicardBasis
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.basis.rank:
            raise DomainError("coefficient vector does not match the basis")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, basis: PicardBasis) -> "DivClass":
        return cls(basis, (0,) * basis.rank)

    @classmethod
    def of(cls, basis: PicardBasis, **terms: int) -> "DivClass":
        """``DivClass.of(b, H=1, D1p=-2, D2m=1)``; ``p``/``m`` stand for ``+``/``-``."""
        v = [0] * basis.rank
        for k, c in terms.items():
            v[basis.index(k.replace("p", "+").replace("m", "-"))] += c
        return cls(basis, tuple(v))

    def _check(self, other: "DivClass") -> None:
        if other.basis != self.basis:
            raise DomainError("classes live on different Picard lattices")

    def __add__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        return DivClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + other.scale(-1)

    def __neg__(self) -> "DivClass":
        return self.scale(-1)

    def scale(self, c: int) -> "DivClass":
        return DivClass(self.basis, tuple(c * a for a in self.coeffs))

    def as_dict(self) -> dict[str, int]:
        return {lab: c for lab, c in zip(self.basis.labels, self.coeffs) if c}


@dataclass(frozen=True)
class CurveClass:
    basis: PicardBasis
    name: str
    pairings: tuple[int, ...]

    def __post_init__(self):
        if len(self.pairings) != self.basis.rank:
            raise DomainError("pairing vector does not match the basis")


def pair(d: DivClass, c: CurveClass) -> int:
    if d.basis != c.basis:
        raise DomainError("divisor and curve live on different Picard lattices")
    return sum(a * b for a, b in zip(d.coeffs, c.pairings))


# --------------------------------------------------------------------------- divisor classes

def _H(b: PicardBasis) -> DivClass:
    return DivClass.of(b, H=1)


def _D(b: PicardBasis, sign: str, i: int) -> DivClass:
    """``D_i^sign``; the top index ``M`` is expanded through ``B_0`` / ``B_M``."""
    if b.has(sign, i):
        v = [0] * b.rank
        v[b.index(f"D{i}{sign}")] = 1
        return DivClass(b, tuple(v))
    if i == b.top:
        return class_B(b.family, b.n, 0 if sign == "+" else b.top)
    raise DomainError(f"D{i}{sign} is not a divisor here")


def _weighted(b: PicardBasis, sign: str, upto: int, start: int) -> DivClass:
    """``sum_{i=1}^{upto} (start - i) D_i^sign``."""
    out = DivClass.zero(b)
    for i in range(1, upto + 1):
        out = out + _D(b, sign, i).scale(start - i)
    return out


def class_B(family: str, n: int, k: int) -> DivClass:
    b = PicardBasis(family, n)
    M = b.top
    if not 0 <= k <= M:
        raise DomainError(f"B_{k} out of range 0..{M}")
    H = _H(b)
    if k == 0:
        return H - _weighted(b, "+", M - 1, M + 1)
    if k == M:
        upto = M if (b.family == "OG" and n % 2) else M - 1
        return H - _weighted(b, "-", upto, M + 1)
    return H - _weighted(b, "+", M - k, M - k + 1) - _weighted(b, "-", k, k + 1)


def class_Delta(family: str, n: int, k: int, sign: str) -> DivClass:
    b = PicardBasis(family, n)
    top = b.plus_range if sign == "+" else b.minus_range
    if not 0 <= k <= top:
        raise DomainError(f"Delta_{k}{sign} out of range")
    return -_weighted(b, sign, k, k + 1)


def class_K(family: str, n: int) -> tuple[DivClass, DivClass]:
    """The canonical class from its closed form and from the colour/boundary expression."""
    b = PicardBasis(family, n)
    M = b.top
    boundary = DivClass.zero(b)
    for i in range(1, M + 1):
        boundary = boundary + _D(b, "+", i) + _D(b, "-", i)
    if b.family == "LG":
        closed = _H(b).scale(-(n + 1))
        for i in range(1, n):
            c = (n + 3 - i) * (n - i) // 2
            closed = closed + (_D(b, "+", i) + _D(b, "-", i)).scale(c)
        colours = DivClass.zero(b)
        for m in range(1, n):
            colours = colours + class_B(family, n, m)
        return closed, -colours - boundary
    closed = _H(b).scale(-2 * (n - 1))
    for i in range(1, b.plus_range + 1):
        c = (n + 3 - 2 * i) * (n - 2 * i) // 2 if n % 2 == 0 else (n + 2 - 2 * i) * (n - 1 - 2 * i) // 2
        closed = closed + _D(b, "+", i).scale(c)
    for i in range(1, b.minus_range + 1):
        closed = closed + _D(b, "-", i).scale((n + 3 - 2 * i) * (n - 2 * i) // 2)
    colours = DivClass.zero(b)
    for m in range(1, M):
        colours = colours + class_B(family, n, m).scale(4)
    if n % 2:
        colours = colours + class_B(family, n, M).scale(3)
    return closed, -colours - boundary


# --------------------------------------------------------------------------- curves

def curve_class(family: str, n: int, kind: str, index: int) -> CurveClass:
    """``kind`` is ``gamma`` (index l), ``zeta_minus`` or ``zeta_plus`` (index j)."""
    b = PicardBasis(family, n)
    v = [0] * b.rank
    M = b.top

    def put(sign: str, i: int, val: int) -> None:
        if b.has(sign, i):
            v[b.index(f"D{i}{sign}")] += val

    if kind == "gamma":
        if not 0 <= index <= M - 1:
            raise DomainError(f"gamma_{index} out of range")
        v[0] = 1
        put("-", index + 1, 1)
        put("-", index + 2, -1)
        put("+", M - index, 1)
        put("+", M - index + 1, -1)
        name = f"gamma_{index}"
    elif kind in ("zeta_minus", "zeta_plus"):
        sign = "-" if kind == "zeta_minus" else "+"
        if not b.has(sign, index):
            raise DomainError(f"{kind}_{index} out of range")
        put(sign, index, -1)
        put(sign, index + 1, 2)
        put(sign, index + 2, -1)
        name = f"zeta{sign}_{index}"
    else:
        raise DomainError(f"unknown curve kind {kind!r}")
    return CurveClass(b, name, tuple(v))


def mori_generators(family: str, n: int) -> list[CurveClass]:
    b = PicardBasis(family, n)
    out = [curve_class(family, n, "gamma", l) for l in range(b.top)]
    out += [curve_class(family, n, "zeta_minus", j) for j in range(1, b.minus_range + 1)]
    out += [curve_class(family, n, "zeta_plus", j) for j in range(1, b.plus_range + 1)]
    return out


# --------------------------------------------------------------------------- nef cone

def nef_coordinates_to_class(family: str, n: int, coords: Sequence[int]) -> DivClass:
    """``(h, a_1..a_p, b_1..b_q)`` to ``h H + sum a_i Delta_i^- + sum b_j Delta_j^+``."""
    b = PicardBasis(family, n)
    p, q = b.minus_range, b.plus_range
    if len(coords) != 1 + p + q:
        raise DomainError("wrong number of nef coordinates")
    out = _H(b).scale(coords[0])
    for i in range(1, p + 1):
        out = out + class_Delta(family, n, i, "-").scale(coords[i])
    for j in range(1, q + 1):
        out = out + class_Delta(family, n, j, "+").scale(coords[p + j])
    return out


def nef_inequalities(family: str, n: int) -> list[Vec]:
    """Pairings of every Mori generator with the nef-coordinate basis vectors."""
    b = PicardBasis(family, n)
    dim = b.rank
    basis = [nef_coordinates_to_class(family, n, [int(i == t) for i in range(dim)]) for t in range(dim)]
    return [tuple(pair(d, c) for d in basis) for c in mori_generators(family, n)]


def nef_inequalities_closed_form(family: str, n: int) -> list[Vec]:
    """The system ``h - sum_{i>l} a_i - sum_{j>=M-l} b_j >= 0`` plus ``a, b >= 0``."""
    b = PicardBasis(family, n)
    p, q, M = b.minus_range, b.plus_range, b.top
    rows = []
    for l in range(M):
        rows.append(tuple([1] + [-1 if i >= l + 1 else 0 for i in range(1, p + 1)]
                          + [-1 if j >= M - l else 0 for j in range(1, q + 1)]))
    for t in range(1, p + q + 1):
        rows.append(tuple(int(s == t) for s in range(1 + p + q)))
    return rows


def _check_nef_n(family: str, n: int) -> None:
    if (family == "LG" and n < 2) or (family == "OG" and n < 3):
        raise DomainError("nef cone computations need n >= 2 (LG) or n >= 3 (OG)")


def nef_cone(family: str, n: int) -> RationalCone:
    family = _family(family)
    _check_nef_n(family, n)
    return RationalCone.from_facets(nef_inequalities(family, n), PicardBasis(family, n).rank)


def nef_extremal_rays(family: str, n: int, method: str = "dd") -> RationalCone:
    cone = nef_cone(family, n)
    return RationalCone.from_rays(cone.extremal_rays(method), cone.dim)


def nef_claimed(family: str, n: int) -> RationalCone:
    """Rays ``H + Delta_i^+ + Delta_j^-`` over ``i + j <= M`` inside the index ranges."""
    family = _family(family)
    _check_nef_n(family, n)
    b = PicardBasis(family, n)
    p, q, M = b.minus_range, b.plus_range, b.top
    rays = []
    for i in range(q + 1):
        for j in range(p + 1):
            if i + j <= M:
                rays.append(tuple([1] + [int(t == j) for t in range(1, p + 1)] + [int(t == i) for t in range(1, q + 1)]))
    return RationalCone.from_rays(rays, 1 + p + q)


# --------------------------------------------------------------------------- chain polytope

class Poset:
    """Finite poset from cover relations; ``less`` is the transitive closure."""

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]]):
        self.elements = list(elements)
        pos = {e: i for i, e in enumerate(self.elements)}
        m = len(self.elements)
        reach = [[False] * m for _ in range(m)]
        for lo, hi in covers:
            reach[pos[lo]][pos[hi]] = True
        for k in range(m):
            for i in range(m):
                if reach[i][k]:
                    for j in range(m):
                        if reach[k][j]:
                            reach[i][j] = True
        if any(reach[i][i] for i in range(m)):
            raise DomainError("relations contain a cycle")
        self._pos = pos
        self._reach = reach

    def less(self, x: str, y: str) -> bool:
        return self._reach[self._pos[x]][self._pos[y]]

    def comparable(self, x: str, y: str) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def antichains(self) -> list[tuple[str, ...]]:
        out: list[tuple[str, ...]] = [()]
        for size in range(1, len(self.elements) + 1):
            level = [c for c in combinations(self.elements, size)
                     if all(not self.comparable(x, y) for x, y in combinations(c, 2))]
            if not level:
                break
            out += level
        return out


def nef_poset(family: str, n: int) -> Poset:
    """Elements ``a_1..a_p`` (Delta^- side) and ``b_1..b_q``; ``a`` descends, ``b`` ascends,
    ``a_j < b_i`` exactly when ``i + j > M``."""
    b = PicardBasis(family, n)
    p, q, M = b.minus_range, b.plus_range, b.top
    elems = [f"a{j}" for j in range(1, p + 1)] + [f"b{i}" for i in range(1, q + 1)]
    covers = [(f"a{j + 1}", f"a{j}") for j in range(1, p)]
    covers += [(f"b{i}", f"b{i + 1}") for i in range(1, q)]
    covers += [(f"a{j}", f"b{i}") for j in range(1, p + 1) for i in range(1, q + 1) if i + j > M]
    return Poset(elems, covers)


def chain_polytope_rays(family: str, n: int) -> RationalCone:
    family = _family(family)
    _check_nef_n(family, n)
    b = PicardBasis(family, n)
    poset = nef_poset(family, n)
    rays = [tuple([1] + [int(e in chain) for e in poset.elements]) for chain in poset.antichains()]
    return RationalCone.from_rays(rays, b.rank)


# --------------------------------------------------------------------------- effective cone, Fano

def eff_generators(family: str, n: int) -> RationalCone:
    b = PicardBasis(family, n)
    gens = [_D(b, s, i) for s in "+-" for i in range(1, b.top + 1)]
    if b.family == "OG" and n % 2:
        gens.append(class_B(family, n, b.top))
    return RationalCone.from_rays([g.coeffs for g in gens], b.rank)


def class_in_cone(d: DivClass, cone: RationalCone) -> bool:
    return in_cone(d.coeffs, cone)


@dataclass(frozen=True)
class FanoReport:
    family: Family
    n: int
    verdict: str
    table: tuple[tuple[str, int], ...]


def fano_classify(family: str, n: int) -> FanoReport:
    family = _family(family)
    k, k2 = class_K(family, n)
    if k != k2:
        raise ConsistencyError("the two canonical class expressions disagree")
    table = tuple((c.name, pair(-k, c)) for c in mori_generators(family, n))
    if any(v < 0 for _, v in table):
        raise ConsistencyError(f"negative anticanonical degree: {table}")
    verdict = "fano" if all(v > 0 for _, v in table) else "weak_fano"
    return FanoReport(family, n, verdict, table)


__all__ = [
    "ConsistencyError", "PicardBasis", "DivClass", "CurveClass", "pair", "class_B", "class_Delta", "class_K",
    "curve_class", "mori_generators", "nef_coordinates_to_class", "nef_inequalities",
    "nef_inequalities_closed_form", "nef_cone", "nef_extremal_rays", "nef_claimed", "Poset", "nef_poset",
    "chain_polytope_rays", "eff_generators", "class_in_cone", "FanoReport", "fano_classify", "cones_equal",
    "double_description",
]
