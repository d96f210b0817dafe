"""JSON encoding: rationals as ``"p/q"`` strings (``"p"`` when integral), index tuples as arrays."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .clifford import ExtElement
from .exact_linalg import RationalMatrix, as_rat
from .indexing import Type2Tuple
from .isotropic_models import ChartCoords, PluckerVector


class SchemaError(ValueError):
    """Payload does not match the documented schema; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(v: Any, field: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SchemaError(field, "expected an integer or a 'p/q' string")
    try:
        return as_rat(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(field, str(exc)) from None


def matrix_out(m: RationalMatrix) -> list[list[str]]:
    return [[rat(v) for v in row] for row in m.tolist()]


def matrix_in(v: Any, field: str) -> RationalMatrix:
    if not isinstance(v, list) or not v or not all(isinstance(r, list) for r in v):
        raise SchemaError(field, "expected a non-empty list of rows")
    width = len(v[0])
    if any(len(r) != width for r in v):
        raise SchemaError(field, "rows have different lengths")
    return RationalMatrix([[parse_rat(x, f"{field}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(v)],
                          width)


def plucker_out(p: PluckerVector) -> list[list]:
    return [[list(k), rat(v)] for k, v in p.coords.items()]


def ext_out(e: ExtElement) -> list[list]:
    return [[list(k), rat(v)] for k, v in e.terms.items()]


def coords_out(c: ChartCoords) -> dict[str, dict[str, str]]:
    return {
        "a": {str(k): rat(v) for k, v in sorted(c.a.items())},
        "b": {str(k): rat(v) for k, v in sorted(c.b.items())},
        "x": {f"{i},{j}": rat(v) for (i, j), v in sorted(c.x.items())},
        "xi": {f"{i},{j}": rat(v) for (i, j), v in sorted(c.xi.items())},
        "y": {str(k): rat(v) for k, v in sorted(c.y.items())},
    }


def _key1(k: str, field: str) -> int:
    try:
        return int(k)
    except ValueError:
        raise SchemaError(field, f"key {k!r} is not an integer") from None


def _key2(k: str, field: str) -> tuple[int, int]:
    parts = k.split(",")
    if len(parts) != 2:
        raise SchemaError(field, f"key {k!r} is not of the form 'i,j'")
    return _key1(parts[0], field), _key1(parts[1], field)


def coords_in(v: Any, field: str = "coords") -> ChartCoords:
    if not isinstance(v, Mapping):
        raise SchemaError(field, "expected an object")
    unknown = set(v) - {"a", "b", "x", "xi", "y"}
    if unknown:
        raise SchemaError(f"{field}.{sorted(unknown)[0]}", "unknown coordinate group")
    groups: dict[str, dict] = {}
    for g in ("a", "b", "x", "xi", "y"):
        sub = v.get(g, {})
        f = f"{field}.{g}"
        if not isinstance(sub, Mapping):
            raise SchemaError(f, "expected an object")
        key = _key2 if g in ("x", "xi") else _key1
        groups[g] = {key(k, f): parse_rat(x, f"{f}.{k}") for k, x in sub.items()}
    return ChartCoords(**groups)


def tau_in(v: Any, n: int, l: int, field: str = "tau") -> Type2Tuple | None:
    if v is None:
        return None
    if not isinstance(v, Mapping) or not all(isinstance(v.get(s, []), list) for s in ("plus", "minus")):
        raise SchemaError(field, "expected {'plus': [...], 'minus': [...]}")
    try:
        return Type2Tuple(tuple(v.get("plus", [])), tuple(v.get("minus", [])), n, l)
    except (ValueError, TypeError) as exc:
        raise SchemaError(field, str(exc)) from None
