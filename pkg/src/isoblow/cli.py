"""Command-line front end.

    isoblow report --family lg --n 3
    isoblow verify --suite cones --family og --n 5
    echo '{...}' | isoblow eval chart

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import clifford, isotropic_models as im, lm_resolution as lm, picard_cones as pc
from .exact_linalg import DomainError, RationalMatrix
from .indexing import enum_type2
from .serial import (SchemaError, coords_in, coords_out, ext_out, matrix_in, matrix_out, parse_rat, plucker_out, rat,
                     tau_in)

SUITES = ("charts", "spinor", "cones", "fano", "lm", "all")
CAPS = {"cones": 9, "report": 9, "charts": 7, "spinor": 7, "lm": 7, "fano": 12}
KNOWN_FANO = {"LG": {1, 2}, "OG": {2, 3, 4, 5}}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: str = "LG"
    n: int = 2
    command: str = "report"
    seed: int = 0
    trials: int = 20
    fmt: str = "json"

    def check(self, key: str) -> None:
        lo = 1 if self.family == "LG" else 2
        cap = CAPS[key]
        if not lo <= self.n <= cap:
            raise UsageError(f"{key}: n must lie in {lo}..{cap} for {self.family}")
        if self.trials < 0 or self.seed < 0:
            raise UsageError("seed and trials must be nonnegative")


# --------------------------------------------------------------------------- output

def _emit(obj: Any, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
        return
    for path, value in _flatten(obj):
        out.write(f"{path}\t{value}\n")


def _flatten(obj: Any, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    elif isinstance(obj, list):
        yield prefix, ",".join(str(v) for v in obj)
    else:
        yield prefix, "" if obj is None else (str(obj).lower() if isinstance(obj, bool) else obj)


# --------------------------------------------------------------------------- report

def _div(d: pc.DivClass) -> dict[str, int]:
    return d.as_dict()


def cmd_report(cfg: RunConfig) -> tuple[dict, int]:
    cfg.check("report")
    f, n = cfg.family, cfg.n
    basis = pc.PicardBasis(f, n)
    k1, k2 = pc.class_K(f, n)
    curves = pc.mori_generators(f, n)
    fano = pc.fano_classify(f, n)
    rep: dict[str, Any] = {
        "family": f,
        "n": n,
        "basis": basis.labels,
        "K": {"closed_form": _div(k1), "colour_expression": _div(k2), "agree": k1 == k2},
        "B": {str(k): _div(pc.class_B(f, n, k)) for k in range(basis.top + 1)},
        "mori": [{"curve": c.name, "pairings": dict(zip(basis.labels, c.pairings))} for c in curves],
        "anticanonical_degrees": dict(fano.table),
        "nef": None,
        "eff": [dict(zip(basis.labels, r)) for r in pc.eff_generators(f, n).rays],
        "verdict": fano.verdict,
    }
    try:
        computed = pc.nef_extremal_rays(f, n)
    except DomainError:
        computed = None
    if computed is not None:
        claimed = pc.nef_claimed(f, n)
        chain = pc.chain_polytope_rays(f, n)
        rep["nef"] = {
            "coordinates": ["h"] + [f"a{i}" for i in range(1, basis.minus_range + 1)]
                           + [f"b{j}" for j in range(1, basis.plus_range + 1)],
            "computed": [list(r) for r in computed.rays],
            "claimed": [list(r) for r in sorted(claimed.rays, reverse=True)],
            "equal": pc.cones_equal(computed, claimed),
            "chain_polytope_equal": pc.cones_equal(computed, chain),
        }
    ok = rep["K"]["agree"] and (rep["nef"] is None or (rep["nef"]["equal"] and rep["nef"]["chain_polytope_equal"]))
    return rep, 0 if ok else 1


# --------------------------------------------------------------------------- verify suites

class _Fail(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("check", "failure"))
        self.payload = payload


def _suite_charts(cfg: RunConfig, rng: random.Random) -> int:
    n, checks = cfg.n, 0
    if cfg.family == "LG":
        for l in range(n + 1):
            for tau in enum_type2(n, l):
                for _ in range(cfg.trials):
                    c = im.random_chart_coords("LG", n, l, tau, rng)
                    p = im.chart_point_II(n, l, tau, c)
                    checks += 1
                    if not im.is_isotropic(p):
                        raise _Fail({"check": "isotropy", "l": l, "tau": [list(tau.plus), list(tau.minus)],
                                     "coords": coords_out(c)})
            for k in range(n + 1):
                for _ in range(cfg.trials):
                    c = im.random_chart_coords("LG", n, l, None, rng)
                    checks += 1
                    try:
                        im.pullback_monomial(n, l, k, c)
                    except AssertionError:
                        raise _Fail({"check": "pullback_monomial", "l": l, "k": k, "coords": coords_out(c)})
    else:
        for l in range(0, n + 1, 2):
            for _ in range(cfg.trials):
                c = im.random_chart_coords("OG", n, l, None, rng)
                checks += 1
                if not im.is_isotropic(im.chart_point_O(n, l, c)):
                    raise _Fail({"check": "isotropy", "l": l, "coords": coords_out(c)})
    return checks


def _random_skew(n: int, rng: random.Random) -> RationalMatrix:
    e = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = im.random_rational(rng)
            e[i][j], e[j][i] = v, -v
    return RationalMatrix(e, n)


def _suite_spinor(cfg: RunConfig, rng: random.Random) -> int:
    n, checks = cfg.n, 0
    for l in range(0, n + 1, 2):
        for _ in range(cfg.trials):
            a = _random_skew(n, rng)
            checks += 1
            if not clifford.annihilation_check(n, l, a):
                raise _Fail({"check": "annihilation", "l": l, "A": matrix_out(a)})
        if n >= 2:
            for _ in range(cfg.trials):
                c = im.random_chart_coords("OG", n, l, None, rng)
                m = im.chart_matrix_O(n, l, c)
                checks += 1
                a = clifford.chart_skew_matrix(m, l)
                if not clifford.annihilation_check(n, l, a):
                    raise _Fail({"check": "chart_spinor", "l": l, "coords": coords_out(c)})
    return checks


def _suite_cones(cfg: RunConfig, rng: random.Random) -> int:
    f, n = cfg.family, cfg.n
    computed = pc.nef_extremal_rays(f, n)
    checks = 0
    for name, other in (("claimed", pc.nef_claimed(f, n)), ("chain_polytope", pc.chain_polytope_rays(f, n))):
        checks += 1
        if not pc.cones_equal(computed, other):
            raise _Fail({"check": f"nef_vs_{name}", "computed": [list(r) for r in computed.rays],
                         "other": [list(r) for r in other.rays]})
    checks += 1
    if set(pc.nef_inequalities(f, n)) != set(pc.nef_inequalities_closed_form(f, n)):
        raise _Fail({"check": "nef_inequalities"})
    for ray in pc.nef_claimed(f, n).rays:
        d = pc.nef_coordinates_to_class(f, n, ray)
        for c in pc.mori_generators(f, n):
            checks += 1
            if pc.pair(d, c) < 0:
                raise _Fail({"check": "duality", "ray": list(ray), "curve": c.name})
    eff = pc.eff_generators(f, n)
    basis = pc.PicardBasis(f, n)
    for k in range(basis.top + 1):
        checks += 1
        if not pc.class_in_cone(pc.class_B(f, n, k), eff):
            raise _Fail({"check": "B_in_eff", "k": k})
    return checks


def _suite_fano(cfg: RunConfig, rng: random.Random) -> int:
    try:
        rep = pc.fano_classify(cfg.family, cfg.n)
    except pc.ConsistencyError as exc:
        raise _Fail({"check": "consistency", "message": str(exc)})
    expected = "fano" if cfg.n in KNOWN_FANO[cfg.family] else "weak_fano"
    if rep.verdict != expected:
        raise _Fail({"check": "verdict", "got": rep.verdict, "expected": expected, "table": dict(rep.table)})
    return len(rep.table) + 1


def _suite_lm(cfg: RunConfig, rng: random.Random) -> int:
    f, n, checks = cfg.family, cfg.n, 0
    for _ in range(cfg.trials):
        p = lm.random_lm_point(f, n, rng)
        checks += 2
        if not im.is_isotropic(lm.lm_eval(f, p)):
            raise _Fail({"check": "lm_isotropy", "x00": rat(p.x00), "X": matrix_out(p.X)})
        back = lm.lm_invert(f, lm.kal_project(lm.lm_image(f, p)))
        if not back.projectively_equal(p):
            raise _Fail({"check": "round_trip", "x00": rat(p.x00), "X": matrix_out(p.X)})
    expected = n if f == "LG" else n // 2
    for _ in range(cfg.trials):
        q = lm.fiber_coords_template(f, n, rng)
        fd = lm.fiber_degree(f, n, q)
        checks += 1
        if fd.degree != expected or not fd.constant_one:
            raise _Fail({"check": "fiber_degree", "degree": fd.degree, "expected": expected, "q": coords_out(q)})
    return checks


SUITE_FUNCS: dict[str, Callable[[RunConfig, random.Random], int]] = {
    "charts": _suite_charts, "spinor": _suite_spinor, "cones": _suite_cones, "fano": _suite_fano, "lm": _suite_lm,
}


def cmd_verify(cfg: RunConfig, suite: str) -> tuple[dict, int]:
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    results = []
    code = 0
    for name in names:
        if name == "cones" and ((cfg.family == "LG" and cfg.n < 2) or (cfg.family == "OG" and cfg.n < 3)):
            results.append({"suite": name, "skipped": "nef cone needs n >= 2 (LG) or n >= 3 (OG)"})
            continue
        cfg.check(name)
        rng = random.Random(f"{cfg.seed}:{name}:{cfg.family}:{cfg.n}")
        try:
            checks = SUITE_FUNCS[name](cfg, rng)
            results.append({"suite": name, "passed": True, "checks": checks})
        except _Fail as fail:
            code = 1
            results.append({"suite": name, "passed": False, "counterexample": fail.payload})
    return {"family": cfg.family, "n": cfg.n, "seed": cfg.seed, "trials": cfg.trials, "results": results}, code


# --------------------------------------------------------------------------- eval

def _need(payload: dict, key: str, kind: type | tuple = object):
    if key not in payload:
        raise SchemaError(key, "missing field")
    v = payload[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise SchemaError(key, "expected an integer")
    if kind is not int and not isinstance(v, kind):
        raise SchemaError(key, f"expected {getattr(kind, '__name__', kind)}")
    return v


def _family_field(payload: dict) -> str:
    f = str(payload.get("family", "LG")).upper()
    if f not in ("LG", "OG"):
        raise SchemaError("family", "expected 'LG' or 'OG'")
    return f


def cmd_eval(what: str, payload: Any) -> tuple[dict, int]:
    if not isinstance(payload, dict):
        raise SchemaError("<root>", "expected a JSON object")
    if what == "chart":
        f = _family_field(payload)
        n, l = _need(payload, "n", int), _need(payload, "l", int)
        tau = tau_in(payload.get("tau"), n, l)
        c = coords_in(_need(payload, "coords", dict))
        try:
            if f == "LG":
                p = im.chart_point_II(n, l, tau, c) if tau is not None else im.chart_point_I(n, l, c)
            else:
                p = im.chart_point_O(n, l, c)
        except im.CoordinateError as exc:
            raise SchemaError(f"coords.{exc.group}", str(exc)) from None
        return {"family": f, "n": n, "l": l, "matrix": matrix_out(p.matrix), "isotropic": im.is_isotropic(p)}, 0
    if what == "plucker":
        m = matrix_in(_need(payload, "matrix", list), "matrix")
        if m.cols != 2 * m.rows:
            raise SchemaError("matrix", "expected n rows and 2n columns")
        pv = im.plucker_embed(m)
        return {"n": m.rows, "coords": plucker_out(pv)}, 0
    if what == "spinor":
        m = matrix_in(_need(payload, "matrix", list), "matrix")
        if m.cols != 2 * m.rows:
            raise SchemaError("matrix", "expected n rows and 2n columns")
        l = payload.get("l", 0)
        if isinstance(l, bool) or not isinstance(l, int):
            raise SchemaError("l", "expected an integer")
        phi = clifford.spinor_embed(m, l)
        return {"n": m.rows, "l": l, "terms": ext_out(phi)}, 0
    if what == "lm":
        f = _family_field(payload)
        x00 = parse_rat(_need(payload, "x00"), "x00")
        X = matrix_in(_need(payload, "X", list), "X")
        try:
            p = lm.LMPoint(x00, X, f)
        except DomainError as exc:
            raise SchemaError("X", str(exc)) from None
        pt = lm.lm_eval(f, p)
        out: dict[str, Any] = {"family": f, "matrix": matrix_out(pt.matrix)}
        if f == "LG":
            out["kal"] = plucker_out(lm.kal_project(im.plucker_embed(pt)))
        elif x00 != 0:
            out["kal"] = ext_out(lm.kal_project(clifford.spinor_embed(pt, 0)))
        else:
            out["kal"] = None
        if x00 != 0:
            back = lm.lm_invert(f, lm.kal_project(lm.lm_image(f, p)))
            out["round_trip"] = back.projectively_equal(p)
        return out, 0
    raise UsageError(f"unknown eval target {what!r}")


# --------------------------------------------------------------------------- entry point

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 2 for every usage problem
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="isoblow", description="Exact checks for blow-ups of isotropic Grassmannians.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--family", type=str.upper, choices=("LG", "OG"), default="LG")
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int, default=20)
        sp.add_argument("--format", dest="fmt", choices=("json", "tsv"), default="json")

    common(sub.add_parser("report", help="Picard lattice, cones and Fano verdict"))
    v = sub.add_parser("verify", help="run an invariant suite")
    common(v)
    v.add_argument("--suite", choices=SUITES, default="all")
    e = sub.add_parser("eval", help="evaluate one operation on JSON from stdin")
    e.add_argument("target", choices=("chart", "plucker", "spinor", "lm"))
    return p


def main(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            text = stdin.read()
            if not text.strip():
                raise UsageError("empty payload on stdin")
            try:
                payload = json.loads(text)
            except json.JSONDecodeError as exc:
                raise UsageError(f"invalid JSON: {exc}") from None
            try:
                obj, code = cmd_eval(args.target, payload)
            except SchemaError as exc:
                _emit({"error": "schema", "field": exc.field, "message": str(exc)}, "json", stdout)
                return 2
            except DomainError as exc:
                kind = "base_locus" if "base locus" in str(exc) else "domain"
                _emit({"error": kind, "message": str(exc)}, "json", stdout)
                return 2
            _emit(obj, "json", stdout)
            return code
        cfg = RunConfig(args.family, args.n, args.command, args.seed, args.trials, args.fmt)
        if args.command == "report":
            obj, code = cmd_report(cfg)
        else:
            obj, code = cmd_verify(cfg, args.suite)
        _emit(obj, cfg.fmt, stdout)
        return code
    except UsageError as exc:
        sys.stderr.write(f"isoblow: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
