"""JSON job descriptions for the command-line front end.

Schema (version 1)::

    {
      "schema": 1,
      "ring": "Z" | "Q" | "Qt",
      "command": "<command>",                      # optional if given on the CLI
      "objects": {
        "<name>": {
          "terms": [{"degree": 0, "generators": 1, "relations": [["6"]]}],
          "differentials": [{"degree": 0, "matrix": [["2"]]}]
        }
      },
      "maps":  {"<name>": {"source": "<obj>", "target": "<obj>",
                           "components": [{"degree": 0, "matrix": [["1"]]}]}},
      "roofs": {"<name>": {"s": "<map>", "a": "<map>"}},
      "params": {...}
    }

Integers are decimal strings (plain JSON integers are accepted too);
rationals are ``"p/q"``; polynomials are coefficient arrays, lowest degree
first, or strings such as ``"t^2+1"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict

from .complexes import ChainMap, FreeComplex, ModuleComplex
from .errors import HomologError, IllDefinedMap
from .fpmod import FpModule, ModuleMap
from .matrix import Matrix
from .rings import Poly, Ring, ring_from_tag

SCHEMA_VERSION = 1

COMMANDS = (
    "cohomology", "cone", "truncate", "hom", "tensor", "resolve", "ext", "tor", "rhom",
    "dtensor", "dhom", "roof-eq", "dualize", "biduality", "classify", "verify-dualizing",
    "axioms-check",
)


class JobSpecError(HomologError, ValueError):
    """Malformed job; ``path`` names the first offending location."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass
class JobSpec:
    ring: Ring
    command: str
    objects: Dict[str, ModuleComplex] = field(default_factory=dict)
    maps: Dict[str, ChainMap] = field(default_factory=dict)
    roofs: Dict[str, Dict[str, str]] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)
    map_refs: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def complex(self, name: str, path: str = "params") -> ModuleComplex:
        try:
            return self.objects[name]
        except (KeyError, TypeError):
            raise JobSpecError(path, f"unknown object {name!r}") from None

    def free_complex(self, name: str, path: str = "params") -> FreeComplex:
        X = self.complex(name, path)
        if not X.is_free():
            raise JobSpecError(path, f"object {name!r} has relations; this command needs a free complex")
        return X.as_free_complex()


# ---------------------------------------------------------------------------
# entries
# ---------------------------------------------------------------------------


def parse_entry(ring: Ring, value, path: str):
    try:
        if ring.tag == "Qt":
            if isinstance(value, list):
                return Poly(Fraction(str(c)) if not isinstance(c, int) else c for c in value)
            if isinstance(value, (int, str)) and not isinstance(value, bool):
                return ring.parse(str(value))
        elif isinstance(value, (int, str)) and not isinstance(value, bool):
            return ring.parse(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise JobSpecError(path, f"bad ring element {value!r}: {exc}") from None
    raise JobSpecError(path, f"bad ring element {value!r}")


def format_entry(ring: Ring, x):
    if ring.tag == "Qt":
        return [_fmt_frac(c) for c in x.coeffs]
    return ring.format(x)


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_matrix(ring: Ring, rows, shape, path: str) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise JobSpecError(path, "matrix must be a list of rows")
    r, c = shape
    if len(rows) != r or any(len(row) != c for row in rows):
        got = (len(rows), len(rows[0]) if rows else 0)
        raise JobSpecError(path, f"matrix has shape {got}, expected {shape}")
    return Matrix(ring, [[parse_entry(ring, x, f"{path}[{i}][{j}]") for j, x in enumerate(row)]
                         for i, row in enumerate(rows)], shape=shape)


def format_matrix(M: Matrix):
    return [[format_entry(M.ring, x) for x in row] for row in M.rows_list()]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _expect(obj, key, kind, path, default=...):
    if key not in obj:
        if default is ...:
            raise JobSpecError(f"{path}.{key}", "missing")
        return default
    v = obj[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise JobSpecError(f"{path}.{key}", f"expected {getattr(kind, '__name__', kind)}")
    return v


def _parse_complex(ring: Ring, spec, path: str) -> ModuleComplex:
    if not isinstance(spec, dict):
        raise JobSpecError(path, "object must be a JSON object")
    mods: Dict[int, FpModule] = {}
    for k, term in enumerate(_expect(spec, "terms", list, path)):
        tp = f"{path}.terms[{k}]"
        if not isinstance(term, dict):
            raise JobSpecError(tp, "term must be a JSON object")
        deg = _expect(term, "degree", int, tp)
        n = _expect(term, "generators", int, tp)
        if n < 0:
            raise JobSpecError(f"{tp}.generators", "must be nonnegative")
        if deg in mods:
            raise JobSpecError(f"{tp}.degree", f"degree {deg} appears twice")
        rels = _expect(term, "relations", list, tp, [])
        pres = parse_matrix(ring, rels, (len(rels), n), f"{tp}.relations")
        mods[deg] = FpModule(ring, n, pres)
    gens = lambda i: mods[i].generators if i in mods else 0
    diffs = {}
    for k, dspec in enumerate(_expect(spec, "differentials", list, path, [])):
        dp = f"{path}.differentials[{k}]"
        if not isinstance(dspec, dict):
            raise JobSpecError(dp, "differential must be a JSON object")
        deg = _expect(dspec, "degree", int, dp)
        if deg in diffs:
            raise JobSpecError(f"{dp}.degree", f"differential d^{deg} given twice")
        diffs[deg] = parse_matrix(ring, _expect(dspec, "matrix", list, dp), (gens(deg + 1), gens(deg)),
                                  f"{dp}.matrix")
    try:
        X = ModuleComplex(ring, mods, diffs)
    except IllDefinedMap as exc:
        raise JobSpecError(f"{path}.differentials", str(exc)) from None
    for i in X.degrees():
        prod = X.d(i + 1) @ X.d(i)
        if not prod.is_zero():
            raise JobSpecError(f"{path}.differentials",
                               f"d∘d ≠ 0 at degree {i}: product {format_matrix(prod.matrix)}")
    return X


def _free_or_module(X: ModuleComplex):
    return X.as_free_complex() if X.is_free() else X


def _parse_map(ring, spec, objects, path) -> ChainMap:
    if not isinstance(spec, dict):
        raise JobSpecError(path, "map must be a JSON object")
    names = {}
    for end in ("source", "target"):
        name = _expect(spec, end, str, path)
        if name not in objects:
            raise JobSpecError(f"{path}.{end}", f"unknown object {name!r}")
        names[end] = name
    S, T = objects[names["source"]], objects[names["target"]]
    comps = {}
    for k, cspec in enumerate(_expect(spec, "components", list, path, [])):
        cp = f"{path}.components[{k}]"
        deg = _expect(cspec, "degree", int, cp)
        comps[deg] = parse_matrix(ring, _expect(cspec, "matrix", list, cp),
                                  (T.module(deg).generators, S.module(deg).generators), f"{cp}.matrix")
    f = ChainMap(_free_or_module(S), _free_or_module(T), comps)
    if not f.is_chain_map():
        raise JobSpecError(path, "components do not commute with the differentials")
    return f


def parse_jobspec(text: str, command: str = None) -> JobSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobSpecError("$", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise JobSpecError("$", "job must be a JSON object")
    schema = data.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise JobSpecError("$.schema", f"unsupported schema version {schema!r}")
    tag = _expect(data, "ring", str, "$")
    try:
        ring = ring_from_tag(tag)
    except ValueError as exc:
        raise JobSpecError("$.ring", str(exc)) from None
    cmd = data.get("command")
    if command is not None:
        if cmd is not None and cmd != command:
            raise JobSpecError("$.command", f"job says {cmd!r} but {command!r} was requested")
        cmd = command
    if cmd not in COMMANDS:
        raise JobSpecError("$.command", f"unknown command {cmd!r}")
    objects = {}
    for name, spec in sorted(_expect(data, "objects", dict, "$", {}).items()):
        objects[name] = _parse_complex(ring, spec, f"$.objects.{name}")
    maps, refs = {}, {}
    for name, spec in sorted(_expect(data, "maps", dict, "$", {}).items()):
        maps[name] = _parse_map(ring, spec, objects, f"$.maps.{name}")
        refs[name] = {"source": spec["source"], "target": spec["target"]}
    roofs = {}
    for name, spec in sorted(_expect(data, "roofs", dict, "$", {}).items()):
        rp = f"$.roofs.{name}"
        if not isinstance(spec, dict):
            raise JobSpecError(rp, "roof must be a JSON object")
        for leg in ("s", "a"):
            m = _expect(spec, leg, str, rp)
            if m not in maps:
                raise JobSpecError(f"{rp}.{leg}", f"unknown map {m!r}")
        if refs[spec["s"]]["source"] != refs[spec["a"]]["source"]:
            raise JobSpecError(rp, "legs s and a must share their source (the apex)")
        roofs[name] = {"s": spec["s"], "a": spec["a"]}
    params = _expect(data, "params", dict, "$", {})
    for key, value in params.items():
        if isinstance(value, str) and key in _OBJECT_PARAMS and value not in objects:
            raise JobSpecError(f"$.params.{key}", f"unknown object {value!r}")
    return JobSpec(ring, cmd, objects, maps, roofs, dict(params), refs)


_OBJECT_PARAMS = {"object", "M", "N", "R", "R2"}


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _complex_to_json(X: ModuleComplex):
    terms = [{"degree": i, "generators": M.generators, "relations": format_matrix(M.presentation)}
             for i, M in X.modules.items()]
    diffs = [{"degree": i, "matrix": format_matrix(X.d(i).matrix)}
             for i in X.degrees() if not X.d(i).matrix.is_zero()]
    return {"terms": terms, "differentials": diffs}


def jobspec_to_dict(job: JobSpec) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "ring": job.ring.tag,
        "command": job.command,
        "objects": {name: _complex_to_json(X) for name, X in sorted(job.objects.items())},
        "params": job.params,
    }
    if job.maps:
        out["maps"] = {
            name: {**job.map_refs[name],
                   "components": [{"degree": i, "matrix": format_matrix(m)}
                                  for i, m in f.components.items() if not m.is_zero()]}
            for name, f in sorted(job.maps.items())
        }
    if job.roofs:
        out["roofs"] = dict(sorted(job.roofs.items()))
    return out


def serialize_jobspec(job: JobSpec) -> str:
    """Canonical JSON text; ``serialize(parse(serialize(parse(t))))`` is a fixed point."""
    return json.dumps(jobspec_to_dict(job), sort_keys=True, ensure_ascii=False, indent=2) + "\n"
