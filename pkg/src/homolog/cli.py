"""``homolog`` command-line front end.

    homolog <command> --input job.json [--seed N] [--json|--pretty] [--witness]

Exit codes: 0 success, 1 domain rejection, 2 malformed input, 3 internal
solver failure (a reproduction bundle goes to stderr), 4 coefficient cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from typing import Any, Dict

from . import __version__
from .checks import run_axioms
from .complexes import (
    ChainMap,
    FreeComplex,
    ModuleComplex,
    cohomology,
    cohomology_table,
    cone,
    hom_complex,
    is_null_homotopic,
    smart_truncate_ge,
    smart_truncate_le,
    stupid_truncate,
    tensor_complex,
)
from .derived import (
    Roof,
    derived_hom_group,
    derived_tensor,
    ext,
    ext_table,
    normalize_roof,
    resolve_complex,
    rhom,
    tor,
    tor_table,
)
from .duality import biduality_map, classify_dualizing, dual, verify_dualizing
from .errors import CoefficientOverflow, IllDefinedMap, LiftError, NotAComplex, NotDualizing, NotQuasiIsomorphism
from .jobspec import COMMANDS, JobSpec, JobSpecError, format_matrix, jobspec_to_dict, parse_jobspec
from .matrix import entry_bit_cap
from .resolve import free_resolution

EXIT_OK, EXIT_REJECTED, EXIT_MALFORMED, EXIT_INTERNAL, EXIT_OVERFLOW = 0, 1, 2, 3, 4


class Rejected(Exception):
    """Domain rejection carrying a partial report."""

    def __init__(self, message: str, report: Dict[str, Any]):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# report helpers
# ---------------------------------------------------------------------------


def _nf(M) -> str:
    return str(M.normal_form())


def _table(X) -> Dict[str, str]:
    return {str(i): _nf(H) for i, H in cohomology_table(X).items()}


def _complex_json(X) -> Dict[str, Any]:
    if isinstance(X, FreeComplex):
        return {"ranks": {str(i): X.rank(i) for i in X.degrees()},
                "differentials": {str(i): format_matrix(X.d(i)) for i in X.degrees()
                                  if X.rank(i) and X.rank(i + 1)}}
    return {"modules": {str(i): _nf(M) for i, M in X.modules.items()},
            "differentials": {str(i): format_matrix(X.d(i).matrix) for i in X.degrees()
                              if X.module(i).generators and X.module(i + 1).generators}}


def _map_json(f) -> Dict[str, Any]:
    return {str(i): format_matrix(m) for i, m in f.components.items()}


def _param(job: JobSpec, key: str, kind=str, default=...):
    if key not in job.params:
        if default is ...:
            raise JobSpecError(f"$.params.{key}", "missing")
        return default
    v = job.params[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise JobSpecError(f"$.params.{key}", f"expected {kind.__name__}")
    return v


def _obj(job: JobSpec, key: str):
    return job.complex(_param(job, key), f"$.params.{key}")


def _free(job: JobSpec, key: str) -> FreeComplex:
    return job.free_complex(_param(job, key), f"$.params.{key}")


def _roof(job: JobSpec, key: str) -> Roof:
    name = _param(job, key)
    if name not in job.roofs:
        raise JobSpecError(f"$.params.{key}", f"unknown roof {name!r}")
    legs = job.roofs[name]
    s, a = job.maps[legs["s"]], job.maps[legs["a"]]
    if not (isinstance(s.source, FreeComplex) and isinstance(a.target, FreeComplex)
            and isinstance(s.target, FreeComplex)):
        raise JobSpecError(f"$.roofs.{name}", "roof legs must be maps of free complexes")
    return Roof(s.source, s, a)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_cohomology(job, witness):
    return {"cohomology": _table(_obj(job, "object"))}


def cmd_cone(job, witness):
    f = job.maps.get(_param(job, "map"))
    if f is None:
        raise JobSpecError("$.params.map", f"unknown map {job.params['map']!r}")
    N, beta, gamma = cone(f)
    out = {"cohomology": _table(N)}
    if witness:
        out["cone"] = _complex_json(N)
        out["beta"] = _map_json(beta)
        out["gamma"] = _map_json(gamma)
    return out


def cmd_truncate(job, witness):
    X = _free(job, "object")
    kind = _param(job, "kind", str, "smart-le")
    if kind == "stupid":
        T = stupid_truncate(X, _param(job, "lo", int), _param(job, "hi", int))
    elif kind == "smart-le":
        T, _ = smart_truncate_le(X, _param(job, "degree", int))
    elif kind == "smart-ge":
        T, _ = smart_truncate_ge(X, _param(job, "degree", int))
    else:
        raise JobSpecError("$.params.kind", f"unknown truncation {kind!r}")
    out = {"cohomology": _table(T)}
    if witness:
        out["complex"] = _complex_json(T)
    return out


def cmd_hom(job, witness):
    H = hom_complex(_free(job, "M"), _free(job, "N"))
    out = {"cohomology": _table(H)}
    if witness:
        out["complex"] = _complex_json(H)
    return out


def cmd_tensor(job, witness):
    T = tensor_complex(_free(job, "M"), _free(job, "N"))
    out = {"cohomology": _table(T)}
    if witness:
        out["complex"] = _complex_json(T)
    return out


def cmd_resolve(job, witness):
    res = free_resolution(_obj(job, "object"))
    out = {"ranks": {str(i): res.complex.rank(i) for i in res.complex.degrees()},
           "cohomology": _table(res.complex),
           "quasi_isomorphism": res.is_quasi_iso()}
    if witness:
        out["complex"] = _complex_json(res.complex)
        out["augmentation"] = _map_json(res.augmentation)
    return out


def _indexed(job, single, table, label):
    M, N = _obj(job, "M"), _obj(job, "N")
    if "i" in job.params:
        i = _param(job, "i", int)
        return {label: {str(i): _nf(single(M, N, i))}}
    return {label: {str(i): _nf(H) for i, H in table(M, N).items()}}


def cmd_ext(job, witness):
    return _indexed(job, ext, ext_table, "ext")


def cmd_tor(job, witness):
    return _indexed(job, tor, tor_table, "tor")


def cmd_dhom(job, witness):
    M, N = _obj(job, "M"), _obj(job, "N")
    i = _param(job, "i", int, 0)
    return {"dhom": {str(i): _nf(derived_hom_group(M, N, i))}}


def cmd_rhom(job, witness):
    X = rhom(_obj(job, "M"), _obj(job, "N"))
    out = {"cohomology": _table(X)}
    if witness:
        out["complex"] = _complex_json(X)
    return out


def cmd_dtensor(job, witness):
    X = derived_tensor(_obj(job, "M"), _obj(job, "N"))
    out = {"cohomology": _table(X)}
    if witness:
        out["complex"] = _complex_json(X)
    return out


def cmd_roof_eq(job, witness):
    r1, r2 = _roof(job, "r1"), _roof(job, "r2")
    if r1.source != r2.source or r1.target != r2.target:
        raise JobSpecError("$.params", "roofs r1 and r2 have different endpoints")
    n1, n2 = normalize_roof(r1), normalize_roof(r2)
    h = is_null_homotopic(n1.a - n2.a)
    out = {"equal": h is not None}
    if witness:
        out["apex"] = _complex_json(n1.apex)
        out["numerators"] = [_map_json(n1.a), _map_json(n2.a)]
        if h is not None:
            out["homotopy"] = _map_json(h)
    return out


def _dualizing_check(R, which):
    rep = verify_dualizing(R)
    if not rep.is_dualizing:
        raise Rejected(f"{which} is not dualizing: {rep.reason}",
                       {"dualizing": False, "which": which, "reason": rep.reason})


def cmd_dualize(job, witness):
    M, R = _obj(job, "M"), _obj(job, "R")
    _dualizing_check(R, "R")
    D = dual(M, R)
    out = {"cohomology": _table(D)}
    if witness:
        out["complex"] = _complex_json(D)
    return out


def cmd_biduality(job, witness):
    M, R = _obj(job, "M"), _obj(job, "R")
    _dualizing_check(R, "R")
    b = biduality_map(M, R)
    out = {"quasi_isomorphism": b.qis, "chain_isomorphism": b.chain_iso}
    if witness:
        out["theta"] = _map_json(b.theta)
    return out


def cmd_classify(job, witness):
    R, R2 = _obj(job, "R"), _obj(job, "R2")
    _dualizing_check(R, "R")
    _dualizing_check(R2, "R2")
    return {"shift": classify_dualizing(R, R2)}


def cmd_verify_dualizing(job, witness):
    rep = verify_dualizing(_obj(job, "R"))
    out = {"dualizing": rep.is_dualizing, "reason": rep.reason}
    if witness:
        out["rhom_cohomology"] = {str(i): str(nf) for i, nf in rep.cohomology.items()}
    return out


def cmd_axioms_check(job, witness, seed=None):
    if seed is None:
        seed = _param(job, "seed", int, 0)
    trials = _param(job, "trials", int, 100)
    results = run_axioms(seed, trials, job.ring)
    out = {"seed": seed, "trials": trials,
           "checks": {name: {"passed": p, "total": t} for name, (p, t) in results.items()}}
    if any(p != t for p, t in results.values()):
        raise Rejected("some property checks failed", out)
    return out


HANDLERS = {
    "cohomology": cmd_cohomology, "cone": cmd_cone, "truncate": cmd_truncate, "hom": cmd_hom,
    "tensor": cmd_tensor, "resolve": cmd_resolve, "ext": cmd_ext, "tor": cmd_tor, "rhom": cmd_rhom,
    "dtensor": cmd_dtensor, "dhom": cmd_dhom, "roof-eq": cmd_roof_eq, "dualize": cmd_dualize,
    "biduality": cmd_biduality, "classify": cmd_classify, "verify-dualizing": cmd_verify_dualizing,
    "axioms-check": cmd_axioms_check,
}
assert set(HANDLERS) == set(COMMANDS)


def run(job: JobSpec, seed=None, witness: bool = False) -> Dict[str, Any]:
    """Execute ``job``; returns the report dict (``status`` is ``ok``).

    Raises :class:`Rejected` for domain rejections; other errors propagate.
    """
    handler = HANDLERS[job.command]
    if job.command == "axioms-check":
        result = handler(job, witness, seed)
    else:
        result = handler(job, witness)
    return {"command": job.command, "ring": job.ring.tag, "status": "ok", "result": result}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def render_json(report) -> str:
    return json.dumps(report, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def _pretty_lines(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for k in sorted(value, key=_degree_key):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                yield f"{pad}{k}:"
                yield from _pretty_lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_scalar(v)}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                yield f"{pad}-"
                yield from _pretty_lines(v, indent + 1)
            else:
                yield f"{pad}{_scalar(v)}"
    else:
        yield f"{pad}{_scalar(value)}"


def _degree_key(k):
    try:
        return (0, int(k), "")
    except ValueError:
        return (1, 0, k)


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def render_pretty(report) -> str:
    head = f"{report['command']} over {report['ring']}: {report['status']}"
    return "\n".join([head, *_pretty_lines(report.get("result", {}), 1)]) + "\n"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _build_parser():
    p = argparse.ArgumentParser(prog="homolog", description="Exact derived-category computations over Z, Q[t] and Q.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", required=True, help="job file (JSON); '-' reads stdin")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="machine-readable report (default)")
    fmt.add_argument("--pretty", dest="fmt", action="store_const", const="pretty", help="human-readable report")
    p.add_argument("--witness", action="store_true", help="include homotopies, lifts and complexes")
    p.add_argument("--version", action="version", version=f"homolog {__version__}")
    p.set_defaults(fmt="json")
    return p


def _bit_cap_from_env():
    raw = os.environ.get("HOMOLOG_MAX_ENTRY_BITS")
    if raw in (None, ""):
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise JobSpecError("HOMOLOG_MAX_ENTRY_BITS", f"not an integer: {raw!r}") from None
    if cap <= 0:
        raise JobSpecError("HOMOLOG_MAX_ENTRY_BITS", "must be positive")
    return cap


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = _build_parser().parse_args(argv)
    render = render_pretty if args.fmt == "pretty" else render_json
    text = None
    job = None
    try:
        cap = _bit_cap_from_env()
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        job = parse_jobspec(text, args.command)
        token = entry_bit_cap.set(cap)
        try:
            report = run(job, seed=args.seed, witness=args.witness)
        finally:
            entry_bit_cap.reset(token)
    except OSError as exc:
        print(f"homolog: cannot read input: {exc}", file=stderr)
        return EXIT_MALFORMED
    except (JobSpecError, NotAComplex, IllDefinedMap) as exc:
        print(f"homolog: malformed input: {exc}", file=stderr)
        return EXIT_MALFORMED
    except Rejected as exc:
        print(f"homolog: rejected: {exc}", file=stderr)
        stdout.write(render({"command": job.command, "ring": job.ring.tag, "status": "rejected",
                             "result": exc.report}))
        return EXIT_REJECTED
    except (NotDualizing, NotQuasiIsomorphism) as exc:
        print(f"homolog: rejected: {exc}", file=stderr)
        stdout.write(render({"command": job.command, "ring": job.ring.tag, "status": "rejected",
                             "result": {"reason": str(exc)}}))
        return EXIT_REJECTED
    except CoefficientOverflow as exc:
        print(f"homolog: coefficient overflow: {exc}", file=stderr)
        return EXIT_OVERFLOW
    except (LiftError, AssertionError) as exc:
        bundle = {
            "error": f"{type(exc).__name__}: {exc}",
            "traceback": traceback.format_exc(),
            "command": args.command,
            "seed": args.seed,
            "job": jobspec_to_dict(job) if job is not None else text,
        }
        print("homolog: internal solver failure; reproduction bundle follows", file=stderr)
        print(json.dumps(bundle, sort_keys=True, ensure_ascii=False, indent=2), file=stderr)
        return EXIT_INTERNAL
    stdout.write(render(report))
    return EXIT_OK


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
