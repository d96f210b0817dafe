"""Index sets for Plücker and spinor coordinates and Type-II chart labels.

All indices are 1-based, as in the coordinate conventions of the charts:
columns ``1..n`` are ``e_1..e_n`` and ``n+1..2n`` are ``e*_1..e*_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .exact_linalg import DomainError

PluckerIndex = tuple[int, ...]
SpinorIndex = tuple[int, ...]


def enum_plucker(n: int) -> list[PluckerIndex]:
    if n < 1:
        raise DomainError("n must be >= 1")
    return list(combinations(range(1, 2 * n + 1), n))


def gm_weight(index: PluckerIndex, n: int | None = None) -> int:
    """Number of entries exceeding ``n`` (the dual-side columns)."""
    if n is None:
        n = len(index)
    return sum(1 for i in index if i > n)


def enum_weight_stratum(n: int, k: int) -> list[PluckerIndex]:
    if not 0 <= k <= n:
        raise DomainError(f"weight {k} out of range 0..{n}")
    low = range(1, n + 1)
    high = range(n + 1, 2 * n + 1)
    return sorted(a + b for a in combinations(low, n - k) for b in combinations(high, k))


def weight_index(n: int, k: int) -> PluckerIndex:
    """``I_k = (k+1, ..., n+k)``."""
    if not 0 <= k <= n:
        raise DomainError(f"weight {k} out of range 0..{n}")
    return tuple(range(k + 1, n + k + 1))


def plucker_count(n: int) -> int:
    return comb(2 * n, n)


@dataclass(frozen=True)
class Type2Tuple:
    """A label ``tau = (i+_1..i+_alpha, i-_1..i-_beta)`` of a Type-II chart.

    Each entry ``k`` pairs chart slots ``k, k+1``; ``plus`` entries live in
    ``1..l`` and ``minus`` entries in ``l+1..n``.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    n: int
    l: int

    def __post_init__(self):
        if not type2_admissible(self.plus, self.minus, self.n, self.l):
            raise DomainError(f"{self.plus}|{self.minus} violates the defining inequalities for n={self.n}, l={self.l}")

    @property
    def entries(self) -> tuple[int, ...]:
        return self.plus + self.minus

    def is_empty(self) -> bool:
        return not self.plus and not self.minus


def _chain_ok(seq: tuple[int, ...], lo: int, top: int) -> bool:
    # lo <= s_1 - 1 < s_2 - 2 < ... < s_m - m <= top - m
    shifted = [s - (g + 1) for g, s in enumerate(seq)]
    if not shifted:
        return True
    if shifted[0] < lo or shifted[-1] > top - len(seq):
        return False
    return all(a < b for a, b in zip(shifted, shifted[1:]))


def type2_admissible(plus, minus, n: int, l: int) -> bool:
    return _chain_ok(tuple(plus), 0, l - 1) and _chain_ok(tuple(minus), l, n - 1)


def _chains(lo: int, top: int) -> list[tuple[int, ...]]:
    # shifted values c_g = s_g - g form a strictly increasing sequence in [lo, top - m]
    out = []
    for m in range(0, max(top - lo, 0) + 2):
        for c in combinations(range(lo, top - m + 1), m):
            out.append(tuple(v + g + 1 for g, v in enumerate(c)))
    return out


def enum_type2(n: int, l: int) -> list[Type2Tuple]:
    """All Type-II labels for ``(n, l)``, including the empty label (which is the Type-I chart)."""
    if not 0 <= l <= n:
        raise DomainError(f"l={l} out of range 0..{n}")
    plus = _chains(0, l - 1)
    minus = _chains(l, n - 1)
    res = [Type2Tuple(p, m, n, l) for p in plus for m in minus]
    return sorted(set(res), key=lambda t: (t.plus, t.minus))


def enum_spinor_indices(n: int) -> list[SpinorIndex]:
    """Even subsets of ``1..n``, grouped by half-size then lexicographic."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return [c for k in range(n // 2 + 1) for c in combinations(range(1, n + 1), 2 * k)]
