"""``toric-hodge`` command line: one subcommand per library operation, JSON on stdout.

Exit codes: 0 success, 1 malformed input, 2 precondition or contract
failure, 3 THEOREM-VIOLATION, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import _kernels
from .applications import independent_conditions_system, jet_separation_system
from .cohomology import cohomology_dims
from .divisors import (DivisorClass, TDivisor, canonical_divisor, class_of,
                       picard_group)
from .errors import (ConsistencyError, ContractError, ParameterError,
                     ResourceError, StructuralError, ToricError)
from .exact import as_fraction
from .fan import Fan, build_standard, f_vector, is_complete, is_smooth
from .positivity import is_ample, is_nef
from .resolutions import euler_check, koszul_omega_terms, rank_check
from .vanishing import (PRECONDITION_FAILED, THEOREM_VIOLATION, QDivisorData,
                        satisfies_pk, verify_theorem_a_trivial_ideal)

EXIT_OK, EXIT_MALFORMED, EXIT_CONTRACT, EXIT_VIOLATION, EXIT_RESOURCE = 0, 1, 2, 3, 4


class InputError(Exception):
    """Malformed command-line payload."""


_BUILTIN = [
    (re.compile(r"^P(\d+)xP(\d+)$", re.I), lambda m: build_standard("PnxPm", [int(m[1]), int(m[2])])),
    (re.compile(r"^P(\d+)$", re.I), lambda m: build_standard("Pn", [int(m[1])])),
    (re.compile(r"^(?:F|Hirzebruch)\(?(\d+)\)?$", re.I), lambda m: build_standard("Hirzebruch", [int(m[1])])),
]


def load_fan(source: str) -> Fan:
    """``builtin:P2``, ``builtin:P2xP1``, ``builtin:F3``, ``file:fan.json`` or a bare path."""
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        for pattern, build in _BUILTIN:
            match = pattern.match(name)
            if match:
                return build(match)
        raise InputError(f"unknown builtin fan {name!r}")
    path = Path(source[len("file:"):] if source.startswith("file:") else source)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read fan file {path}: {exc}") from exc
    return Fan.from_json(data)


def parse_vector(text: str) -> list:
    """JSON array (``[1, "1/2"]``), tuple syntax ``(2,1)`` or a single number."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = "[" + s[1:-1] + "]"
    if not s.startswith("["):
        s = "[" + s + "]"
    try:
        values = json.loads(s)
    except json.JSONDecodeError:
        # allow unquoted fractions such as [1/2, 0]
        values = [v.strip() for v in s[1:-1].split(",") if v.strip()]
    if not isinstance(values, list):
        raise InputError(f"expected a list, got {text!r}")
    try:
        return [as_fraction(v if not isinstance(v, float) else str(v)) for v in values]
    except ParameterError as exc:
        raise InputError(str(exc)) from exc


def _divisor_arg(fan: Fan, args, name="divisor"):
    raw_div = getattr(args, name, None)
    raw_cls = getattr(args, name + "_class", None) if hasattr(args, name + "_class") else None
    if (raw_div is None) == (raw_cls is None):
        raise InputError(f"give exactly one of --{name} or --{name}-class")
    if raw_div is not None:
        values = parse_vector(raw_div)
        if len(values) != fan.n_rays:
            raise InputError(f"--{name} needs {fan.n_rays} coefficients")
        return TDivisor(tuple(values))
    values = parse_vector(raw_cls)
    if len(values) != picard_group(fan).rank:
        raise InputError(f"--{name}-class needs {picard_group(fan).rank} coordinates")
    return DivisorClass(tuple(values))


def _class_arg(fan: Fan, raw: str, flag: str) -> DivisorClass:
    values = parse_vector(raw)
    if len(values) != picard_group(fan).rank:
        raise InputError(f"{flag} needs {picard_group(fan).rank} coordinates")
    return DivisorClass(tuple(values))


def _qd_arg(fan: Fan, args) -> QDivisorData:
    D = _divisor_arg(fan, args, "D")
    if isinstance(D, DivisorClass):
        return QDivisorData.general(fan, D)
    return QDivisorData.from_divisor(fan, D)


# --- subcommands -----------------------------------------------------------

def cmd_fan_check(fan, args):
    out = {"dim": fan.dim, "n_rays": fan.n_rays, "smooth": is_smooth(fan),
           "complete": is_complete(fan), "f_vector": f_vector(fan)}
    if args.intersections:
        try:
            fan.check_intersections()
            out["intersections_ok"] = True
        except StructuralError:
            out["intersections_ok"] = False
    return out, EXIT_OK


def cmd_picard(fan, args):
    pres = picard_group(fan)
    out = {"rank": pres.rank, "pivot_cone": list(pres.pivot_cone),
           "basis_rays": list(pres.basis_rays),
           "ray_classes": [list(c) for c in pres.classes_of_rays()],
           "canonical_class": class_of(fan, canonical_divisor(fan)).to_json()}
    if args.divisor is not None:
        out["class"] = class_of(fan, _divisor_arg(fan, args)).to_json()
    return out, EXIT_OK


def cmd_ample(fan, args):
    return {"ample": is_ample(fan, _divisor_arg(fan, args))}, EXIT_OK


def cmd_nef(fan, args):
    return {"nef": is_nef(fan, _divisor_arg(fan, args))}, EXIT_OK


def cmd_cohomology(fan, args):
    return {"dims": list(cohomology_dims(fan, _divisor_arg(fan, args)).dims)}, EXIT_OK


def cmd_resolve_omega(fan, args):
    terms = koszul_omega_terms(fan, args.p)
    out = terms.to_json(fan)
    out["rank_check"] = rank_check(terms, fan.dim, args.p)
    if args.euler:
        twist = _class_arg(fan, args.twist, "--twist") if args.twist else None
        out["euler_check"] = euler_check(fan, args.p, twist, args.oracle).to_json()
    return out, EXIT_OK


def cmd_check_pk(fan, args):
    qd = _qd_arg(fan, args)
    L = _class_arg(fan, args.L, "--L")
    return satisfies_pk(fan, qd, L, args.k, budget=args.budget).to_json(), EXIT_OK


def cmd_verify_vanishing(fan, args):
    qd = _qd_arg(fan, args)
    L = _class_arg(fan, args.L, "--L")
    report = verify_theorem_a_trivial_ideal(fan, qd, args.k, L, args.triviality, budget=args.budget)
    code = {PRECONDITION_FAILED: EXIT_CONTRACT, THEOREM_VIOLATION: EXIT_VIOLATION}.get(report.status, EXIT_OK)
    return report.to_json(), code


def _system_out(result, args):
    out = result.to_json()
    code = EXIT_CONTRACT if args.strict and not result.precondition_met else EXIT_OK
    return out, code


def cmd_conditions(fan, args):
    D = _divisor_arg(fan, args, "D")
    L = _class_arg(fan, args.L, "--L")
    return _system_out(independent_conditions_system(fan, D, args.m, L), args)


def cmd_jets(fan, args):
    D = _divisor_arg(fan, args, "D")
    L = _class_arg(fan, args.L, "--L")
    return _system_out(jet_separation_system(fan, D, args.m, args.j, L), args)


def cmd_acceptance(_fan, args):
    from .acceptance import run_all

    results = run_all(seed=args.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    out = {"seed": args.seed, "backend": _kernels.BACKEND,
           "criteria": [r.to_json() for r in results],
           "passed": all(r.passed for r in results)}
    if any(r.violation for r in results):
        return out, EXIT_VIOLATION
    return out, EXIT_OK if out["passed"] else EXIT_CONTRACT


# --- parser ----------------------------------------------------------------

def _add_divisor(p, name="divisor", required_hint=""):
    flag = "--" + name
    p.add_argument(flag, dest=name, help=f"torus-invariant divisor, e.g. '[1,0,\"1/2\"]'{required_hint}")
    p.add_argument(flag + "-class", dest=name + "_class",
                   help="class in Picard coordinates, e.g. '(2,1)'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-hodge", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="summary on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, needs_fan=True, **kw):
        p = sub.add_parser(name, **kw)
        if needs_fan:
            p.add_argument("--fan", required=True,
                           help="builtin:P2 | builtin:P2xP1 | builtin:F1 | path to fan JSON")
        p.set_defaults(func=func, needs_fan=needs_fan)
        return p

    p = command("fan-check", cmd_fan_check, help="smoothness, completeness, f-vector")
    p.add_argument("--intersections", action="store_true", help="also test cone intersections")
    p = command("picard", cmd_picard, help="Picard basis and ray classes")
    _add_divisor(p)
    for name, func in (("ample", cmd_ample), ("nef", cmd_nef), ("cohomology", cmd_cohomology)):
        _add_divisor(command(name, func))
    p = command("resolve-omega", cmd_resolve_omega, help="Koszul-type resolution terms of Omega^p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--euler", action="store_true", help="also run the Euler characteristic check")
    p.add_argument("--twist", help="twist class for --euler")
    p.add_argument("--oracle", default="hodge_diagonal", choices=["hodge_diagonal", "Pn_bott"])

    def pk_args(p):
        _add_divisor(p, "D")
        p.add_argument("--L", required=True, help="class of L, e.g. '(2,1)'")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--budget", type=int, default=None)

    pk_args(command("check-pk", cmd_check_pk, help="decide property P_k(D)"))
    p = command("verify-vanishing", cmd_verify_vanishing, help="check the vanishing where I_k(D) is trivial")
    pk_args(p)
    p.add_argument("--triviality", required=True, choices=["smooth_D", "snc_k0"])

    for name, func, jets in (("conditions", cmd_conditions, False), ("jets", cmd_jets, True)):
        p = command(name, func)
        _add_divisor(p, "D")
        p.add_argument("--L", required=True)
        p.add_argument("--m", type=int, required=True)
        if jets:
            p.add_argument("--j", type=int, required=True)
        p.add_argument("--strict", action="store_true", help="exit 2 if L fails P_k")

    p = command("acceptance", cmd_acceptance, needs_fan=False, help="run the acceptance batch")
    p.add_argument("--seed", type=int, default=20190101)
    return parser


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        fan = load_fan(args.fan) if args.needs_fan else None
        out, code = args.func(fan, args)
    except InputError as exc:
        _emit({"error": str(exc), "kind": "malformed_input"})
        return EXIT_MALFORMED
    except ResourceError as exc:
        _emit({"error": str(exc), "kind": "resource"})
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        _emit({"error": str(exc), "kind": "internal_consistency"})
        return EXIT_CONTRACT
    except (ContractError, ParameterError, StructuralError) as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
        return EXIT_CONTRACT
    except ToricError as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
        return EXIT_CONTRACT
    _emit(out)
    if args.verbose:
        print(f"{args.command}: exit {code}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
