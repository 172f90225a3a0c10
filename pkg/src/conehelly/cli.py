"""Command line front end.

Instances and reports travel as JSON.  An instance file looks like

    {"d": 3, "role": "generators", "vectors": [[1, 0, 0], ["1/2", -1, 0]]}

with integer coordinates as JSON numbers (or strings) and non-integers as
strings "p/q" with positive q.  Every subcommand writes a report object
{"operation", "inputs", "result", ...} to stdout; the inputs echo the
full instance so a report is self-contained and can be re-verified later
with --verify.

Exit codes: 0 success, 2 malformed input, 3 enumeration capacity
exceeded, 4 internal-error signal (a theorem-backed assertion fired, or a
report failed re-verification) - the last one always deserves a bug
report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import CapacityError, TheoremContradiction
from .cone import (
    HalfspaceSystem,
    InfeasibleCone,
    extract_cone,
    lineality_of_polar,
    lineality_space,
    max_cone_dim,
    membership,
    solution_space_rank,
    verify_cone_generators,
)
from .fuzzing import ALL_CHECKS, FuzzConfig, run_fuzz
from .gens import (
    gen_axis_pairs,
    gen_example2,
    gen_random,
    gen_simplex_like,
    verify_tightness_example1,
    verify_tightness_example2,
)
from .helly import (
    bound_h,
    check_flat_helly,
    check_lineality_hypothesis,
    corollary_check,
    verify_cone_helly,
    witness_lineality_enum,
    witness_lineality_reay,
)
from .posbasis import (
    PositiveBasis,
    ReayPartition,
    extract_positive_basis_indices,
    is_positive_basis,
    reay_partition,
    verify_reay,
)
from .ratlin import (
    SubspaceBasis,
    VectorSet,
    rank_of_rows,
    dot,
    vec,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4


class InputError(ValueError):
    pass


class VerificationFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# JSON (de)serialization


def frac_to_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_json(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise InputError(f"coordinate {v!r} is not an integer or 'p/q' string")
    try:
        return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad coordinate {v!r}: {exc}") from exc


def vector_to_json(v) -> list:
    return [frac_to_json(c) for c in v]


def instance_to_json(vs: VectorSet, role: str) -> dict:
    return {
        "d": vs.ambient_dim,
        "role": role,
        "vectors": [vector_to_json(v) for v in vs],
    }


def instance_from_json(obj) -> tuple[VectorSet, str]:
    if not isinstance(obj, dict):
        raise InputError("instance must be a JSON object")
    try:
        d = obj["d"]
        role = obj["role"]
        rows = obj["vectors"]
    except KeyError as exc:
        raise InputError(f"instance missing field {exc}") from exc
    if not isinstance(d, int) or d < 1:
        raise InputError("d must be a positive integer")
    if role not in ("generators", "normals"):
        raise InputError(f"unknown role {role!r}")
    vectors = []
    for row in rows:
        if len(row) != d:
            raise InputError(f"vector {row!r} does not have length {d}")
        vectors.append(tuple(frac_from_json(c) for c in row))
    vs = VectorSet(d, tuple(vectors))
    if role == "normals" and any(all(c == 0 for c in v) for v in vs):
        raise InputError("zero vector not allowed among outer normals")
    return vs, role


def subspace_to_json(s: SubspaceBasis) -> dict:
    return {"dim": s.dim, "basis": [vector_to_json(v) for v in s.basis]}


def witness_to_json(w) -> dict:
    return {
        "subset_indices": list(w.subset_indices),
        "property": w.property,
        "size_bound": w.size_bound,
    }


def bounds_to_json(b) -> dict:
    return {"k": b.k, "d": b.d, "m": b.m, "h": b.h}


def make_report(operation: str, inputs: dict, result: dict, bounds=None) -> dict:
    rep = {"operation": operation, "inputs": inputs, "result": result}
    if bounds is not None:
        rep["bounds"] = bounds_to_json(bounds)
    return rep


def _render_pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.append(_render_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {json.dumps(item)}" for item in obj)
    return f"{pad}{json.dumps(obj)}"


def emit(report: dict, pretty: bool) -> None:
    if pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report))


# ---------------------------------------------------------------------------
# Input plumbing


def load_instance(args) -> tuple[VectorSet, str]:
    path = getattr(args, "input", None)
    try:
        if path:
            with open(path, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        else:
            obj = json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read instance: {exc}") from exc
    return instance_from_json(obj)


def load_halfspaces(args) -> HalfspaceSystem:
    vs, _role = load_instance(args)
    try:
        return HalfspaceSystem(vs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_report(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read report: {exc}") from exc


def _instance_from_report(rep: dict) -> tuple[VectorSet, str]:
    return instance_from_json(rep.get("inputs", {}))


# ---------------------------------------------------------------------------
# Subcommand implementations


def cmd_lineality(args) -> dict:
    if args.verify:
        return _verify_lineality(load_report(args.verify))
    vs, role = load_instance(args)
    ls = lineality_space(vs)
    return make_report("lineality", instance_to_json(vs, role), {
        "lineality": subspace_to_json(ls),
    })


def _verify_lineality(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    basis = [vec(row) for row in rep["result"]["lineality"]["basis"]]
    ok = len(basis) == rep["result"]["lineality"]["dim"]
    ok = ok and rank_of_rows([list(v) for v in basis], vs.ambient_dim) == len(basis)
    for w in basis:
        ok = ok and membership(w, vs).is_member
        ok = ok and membership(tuple(-c for c in w), vs).is_member
    ok = ok and len(basis) == lineality_space(vs).dim
    return _verdict(rep, ok)


def cmd_membership(args) -> dict:
    if args.verify:
        return _verify_membership(load_report(args.verify))
    vs, role = load_instance(args)
    if args.point is None:
        raise InputError("membership requires --point")
    try:
        point = vec(args.point.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point: {exc}") from exc
    if len(point) != vs.ambient_dim:
        raise InputError("point has wrong dimension")
    cert = membership(point, vs)
    inputs = instance_to_json(vs, role)
    inputs["point"] = vector_to_json(point)
    if cert.is_member:
        result = {
            "member": True,
            "combination": [[i, frac_to_json(c)] for i, c in cert.combination],
        }
    else:
        result = {"member": False, "separator": vector_to_json(cert.separator)}
    return make_report("membership", inputs, result)


def _verify_membership(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    point = vec(rep["inputs"]["point"])
    res = rep["result"]
    if res["member"]:
        total = [Fraction(0)] * vs.ambient_dim
        ok = True
        for i, c in res["combination"]:
            coeff = frac_from_json(c)
            ok = ok and coeff >= 0 and 0 <= i < len(vs)
            if not ok:
                break
            total = [t + coeff * g for t, g in zip(total, vs[i])]
        ok = ok and tuple(total) == point
    else:
        y = vec(res["separator"])
        ok = all(dot(y, a) <= 0 for a in vs) and dot(y, point) > 0
    return _verdict(rep, ok)


def cmd_posbasis(args) -> dict:
    if args.verify:
        return _verify_posbasis(load_report(args.verify))
    vs, role = load_instance(args)
    kept = extract_positive_basis_indices(vs)
    target = lineality_space(vs)
    return make_report("posbasis", instance_to_json(vs, role), {
        "target": subspace_to_json(target),
        "element_indices": list(kept),
    })


def _verify_posbasis(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    kept = rep["result"]["element_indices"]
    target = SubspaceBasis(vs.ambient_dim,
                           tuple(vec(r) for r in rep["result"]["target"]["basis"]))
    ok = is_positive_basis(vs.subset(kept), target)
    return _verdict(rep, ok)


def cmd_reay(args) -> dict:
    if args.verify:
        return _verify_reay_report(load_report(args.verify))
    vs, role = load_instance(args)
    target = lineality_space(vs)
    if not is_positive_basis(vs, target):
        raise InputError(
            "input is not a positive basis of its own lineality space")
    partition = reay_partition(PositiveBasis(target=target, elements=vs))
    parts_idx = _parts_as_indices(vs, partition)
    return make_report("reay", instance_to_json(vs, role), {
        "target": subspace_to_json(target),
        "parts": parts_idx,
    })


def _parts_as_indices(vs: VectorSet, partition: ReayPartition) -> list[list[int]]:
    remaining = {i: vs[i] for i in range(len(vs))}
    out = []
    for part in partition.parts:
        ids = []
        for v in part:
            i = next(i for i, w in remaining.items() if w == v)
            del remaining[i]
            ids.append(i)
        out.append(sorted(ids))
    return out


def _verify_reay_report(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    parts_idx = rep["result"]["parts"]
    flat = [i for p in parts_idx for i in p]
    ok = sorted(flat) == list(range(len(vs)))
    partition = ReayPartition(vs.ambient_dim,
                              tuple(vs.subset(p) for p in parts_idx))
    ok = ok and verify_reay(partition)
    return _verdict(rep, ok)


def cmd_maxcone(args) -> dict:
    if args.verify:
        return _verify_recompute(load_report(args.verify), "max_cone_dim",
                                 lambda h: max_cone_dim(h))
    h = load_halfspaces(args)
    return make_report("maxcone", instance_to_json(h.normals, "normals"), {
        "max_cone_dim": max_cone_dim(h),
        "lineality_dim": lineality_space(h.normals).dim,
    })


def cmd_solution_rank(args) -> dict:
    if args.verify:
        return _verify_recompute(load_report(args.verify), "rank",
                                 lambda h: solution_space_rank(h))
    h = load_halfspaces(args)
    return make_report("solution-rank", instance_to_json(h.normals, "normals"), {
        "rank": solution_space_rank(h),
    })


def _verify_recompute(rep: dict, field: str, func) -> dict:
    vs, _ = _instance_from_report(rep)
    h = HalfspaceSystem(vs)
    ok = rep["result"][field] == func(h)
    return _verdict(rep, ok)


def cmd_polar_lineality(args) -> dict:
    if args.verify:
        return _verify_polar(load_report(args.verify))
    h = load_halfspaces(args)
    return make_report("polar-lineality", instance_to_json(h.normals, "normals"), {
        "lineality_of_polar": subspace_to_json(lineality_of_polar(h)),
    })


def _verify_polar(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    res = rep["result"]["lineality_of_polar"]
    basis = [vec(r) for r in res["basis"]]
    d = vs.ambient_dim
    ok = len(basis) == res["dim"]
    ok = ok and rank_of_rows([list(v) for v in basis], d) == len(basis)
    ok = ok and all(dot(a, w) == 0 for a in vs for w in basis)
    ok = ok and res["dim"] == d - rank_of_rows([list(v) for v in vs], d)
    return _verdict(rep, ok)


def cmd_extract_cone(args) -> dict:
    if args.verify:
        return _verify_extract(load_report(args.verify))
    h = load_halfspaces(args)
    k = _require_k(args)
    out = extract_cone(h, k)
    inputs = instance_to_json(h.normals, "normals")
    inputs["k"] = k
    if isinstance(out, InfeasibleCone):
        result = {
            "feasible": False,
            "max_cone_dim": out.max_dim,
            "lineality_dim": out.lineality_dim,
        }
    else:
        result = {
            "feasible": True,
            "generators": [vector_to_json(v) for v in out],
        }
    return make_report("extract-cone", inputs, result)


def _verify_extract(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    h = HalfspaceSystem(vs)
    k = rep["inputs"]["k"]
    res = rep["result"]
    if res["feasible"]:
        gens = VectorSet(vs.ambient_dim,
                         tuple(vec(r) for r in res["generators"]))
        ok = verify_cone_generators(h, gens, k)
    else:
        ok = max_cone_dim(h) < k and res["max_cone_dim"] == max_cone_dim(h)
    return _verdict(rep, ok)


def cmd_helly_pos(args) -> dict:
    if args.verify:
        return _verify_helly_pos(load_report(args.verify))
    vs, role = load_instance(args)
    k = _require_k(args)
    hypothesis = check_lineality_hypothesis(vs, k)
    ldim = lineality_space(vs).dim
    result = {
        "hypothesis": hypothesis,
        "conclusion": ldim <= k,
        "lineality_dim": ldim,
        "h": bound_h(k, vs.ambient_dim),
    }
    if ldim > k:
        result["witness_enum"] = witness_to_json(witness_lineality_enum(vs, k))
        result["witness_reay"] = witness_to_json(witness_lineality_reay(vs, k))
    inputs = instance_to_json(vs, role)
    inputs["k"] = k
    return make_report("helly-pos", inputs, result)


def _verify_helly_pos(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    k = rep["inputs"]["k"]
    res = rep["result"]
    ldim = lineality_space(vs).dim
    ok = res["lineality_dim"] == ldim and res["conclusion"] == (ldim <= k)
    for key in ("witness_enum", "witness_reay"):
        if key in res:
            w = res[key]
            ids = w["subset_indices"]
            ok = ok and len(ids) <= w["size_bound"]
            ok = ok and lineality_space(vs.subset(ids)).dim > k
    return _verdict(rep, ok)


def cmd_helly_cone(args) -> dict:
    if args.verify:
        return _verify_helly_cone(load_report(args.verify))
    h = load_halfspaces(args)
    k = _require_k(args)
    rep = verify_cone_helly(h, k)
    inputs = instance_to_json(h.normals, "normals")
    inputs["k"] = k
    result = {
        "hypothesis": rep.hypothesis,
        "conclusion": rep.conclusion,
        "max_cone_dim": rep.max_cone_dim,
        "lineality_dim": rep.lineality_dim,
    }
    if rep.witness is not None:
        result["witness"] = witness_to_json(rep.witness)
    return make_report("helly-cone", inputs, result, bounds=rep.bounds)


def _verify_helly_cone(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    h = HalfspaceSystem(vs)
    k = rep["inputs"]["k"]
    res = rep["result"]
    mcd = max_cone_dim(h)
    ok = res["max_cone_dim"] == mcd and res["conclusion"] == (mcd >= k)
    if "witness" in res:
        ids = res["witness"]["subset_indices"]
        ok = ok and len(ids) <= res["witness"]["size_bound"]
        ok = ok and max_cone_dim(h.subsystem(ids)) < k
    else:
        ok = ok and res["conclusion"]
    return _verdict(rep, ok)


def cmd_corollary(args) -> dict:
    if args.verify:
        return _verify_corollary(load_report(args.verify))
    h = load_halfspaces(args)
    k = _require_k(args)
    rep = corollary_check(h, k)
    inputs = instance_to_json(h.normals, "normals")
    inputs["k"] = k
    result = {
        "rank": rep.rank,
        "global_holds": rep.global_holds,
        "subsystems_hold": rep.subsystems_hold,
    }
    if rep.witness is not None:
        result["witness"] = witness_to_json(rep.witness)
    return make_report("corollary", inputs, result, bounds=rep.bounds)


def _verify_corollary(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    h = HalfspaceSystem(vs)
    k = rep["inputs"]["k"]
    res = rep["result"]
    ok = res["rank"] == solution_space_rank(h)
    ok = ok and res["global_holds"] == (res["rank"] >= k)
    if "witness" in res:
        ids = res["witness"]["subset_indices"]
        ok = ok and len(ids) <= res["witness"]["size_bound"]
        ok = ok and solution_space_rank(h.subsystem(ids)) < k
    return _verdict(rep, ok)


def cmd_flat_helly(args) -> dict:
    if args.verify:
        return _verify_flat(load_report(args.verify))
    h = load_halfspaces(args)
    if args.k is None:
        raise InputError("--k is required")
    rep = check_flat_helly(h, args.k)
    inputs = instance_to_json(h.normals, "normals")
    inputs["k"] = args.k
    result = {
        "polar_lineality_dim": rep.polar_lineality_dim,
        "normal_rank": rep.normal_rank,
        "subspace_conclusion": rep.subspace_conclusion,
        "all_small_subsets_dependent": rep.all_small_subsets_dependent,
    }
    if rep.witness is not None:
        result["witness"] = witness_to_json(rep.witness)
    return make_report("flat-helly", inputs, result)


def _verify_flat(rep: dict) -> dict:
    vs, _ = _instance_from_report(rep)
    k = rep["inputs"]["k"]
    res = rep["result"]
    d = vs.ambient_dim
    ok = res["polar_lineality_dim"] == d - rank_of_rows([list(v) for v in vs], d)
    if "witness" in res:
        ids = res["witness"]["subset_indices"]
        ok = ok and len(ids) == k + 1
        ok = ok and rank_of_rows([list(vs[i]) for i in ids], d) == k + 1
    return _verdict(rep, ok)


def cmd_gen(args) -> dict:
    name = args.example
    if name == "simplex":
        if args.d is None:
            raise InputError("gen simplex requires --d")
        return instance_to_json(gen_simplex_like(args.d), "generators")
    if name == "axis-pairs":
        if args.d is None or args.k is None:
            raise InputError("gen axis-pairs requires --k and --d")
        return instance_to_json(gen_axis_pairs(args.k, args.d), "generators")
    if name == "example2":
        if args.d is None or args.k is None:
            raise InputError("gen example2 requires --k and --d")
        return instance_to_json(gen_example2(args.d, args.k).normals, "normals")
    if name == "random":
        if args.d is None or args.n is None:
            raise InputError("gen random requires --d and --n")
        vs = gen_random(args.d, args.n, args.bound, args.seed)
        return instance_to_json(vs, "generators")
    raise InputError(f"unknown example {name!r}")


def cmd_verify_tightness(args) -> dict:
    if args.example == "1":
        if args.d is None:
            raise InputError("--d is required")
        holds = verify_tightness_example1(args.d)
        inputs = {"example": "1", "d": args.d}
    elif args.example == "2":
        if args.d is None or args.k is None:
            raise InputError("--d and --k are required")
        holds = verify_tightness_example2(args.d, args.k)
        inputs = {"example": "2", "d": args.d, "k": args.k}
    else:
        raise InputError(f"unknown example {args.example!r}")
    return make_report("verify-tightness", inputs, {"holds": holds})


def cmd_fuzz(args) -> tuple[dict, int]:
    seed = args.seed
    env = os.environ.get("CONEHELLY_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise InputError(f"bad CONEHELLY_SEED: {exc}") from exc
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    try:
        config = FuzzConfig(d_max=args.d_max, n_max=args.n_max,
                            bound=args.bound, trials=args.trials, seed=seed,
                            checks=checks)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    summary = run_fuzz(config)
    failures = []
    for f in summary.failures:
        failures.append({
            "trial": f.trial,
            "trial_seed": f.trial_seed,
            "check": f.check,
            "message": f.message,
            "instance": {"d": f.d, "role": "generators",
                         "vectors": [list(v) for v in f.vectors]},
        })
        path = os.path.join(args.dump_dir,
                            f"fuzz_failure_trial{f.trial}_{f.check}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(failures[-1], fh, indent=2)
    report = make_report("fuzz", {
        "d_max": args.d_max, "n_max": args.n_max, "bound": args.bound,
        "trials": args.trials, "seed": seed, "checks": list(checks),
    }, {
        # wall-clock figures stay out of the report so equal seeds give
        # byte-identical output
        "trials_run": summary.trials_run,
        "checks_passed": summary.checks_passed,
        "failures": failures,
        "reay_bases": summary.reay_bases,
    })
    return report, (EXIT_INTERNAL if failures else EXIT_OK)


def _require_k(args) -> int:
    if args.k is None:
        raise InputError("--k is required")
    return args.k


def _verdict(rep: dict, ok: bool) -> dict:
    return {
        "operation": "verify",
        "inputs": {"operation": rep.get("operation")},
        "result": {"verified": bool(ok)},
    }


# ---------------------------------------------------------------------------
# Argument parsing and dispatch

_INSTANCE_COMMANDS = {
    "lineality": cmd_lineality,
    "membership": cmd_membership,
    "posbasis": cmd_posbasis,
    "reay": cmd_reay,
    "maxcone": cmd_maxcone,
    "extract-cone": cmd_extract_cone,
    "solution-rank": cmd_solution_rank,
    "polar-lineality": cmd_polar_lineality,
    "helly-pos": cmd_helly_pos,
    "helly-cone": cmd_helly_cone,
    "corollary": cmd_corollary,
    "flat-helly": cmd_flat_helly,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conehelly",
        description="Exact polyhedral-cone computations and Helly checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in _INSTANCE_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="instance JSON path (default: stdin)")
        p.add_argument("--k", type=int)
        p.add_argument("--point", help="comma-separated rational coordinates")
        p.add_argument("--verify", metavar="REPORT",
                       help="re-verify an existing report instead of computing")
        p.add_argument("--pretty", action="store_true")
        p.add_argument("--json", action="store_true", help="JSON output (default)")

    p = sub.add_parser("gen")
    p.add_argument("--example", required=True,
                   choices=["simplex", "axis-pairs", "example2", "random"])
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-tightness")
    p.add_argument("--example", required=True, choices=["1", "2"])
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fuzz")
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", help="comma-separated subset of "
                   + ",".join(ALL_CHECKS))
    p.add_argument("--dump-dir", default=".",
                   help="directory for failing-instance dumps")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--json", action="store_true")

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "gen":
            emit(cmd_gen(args), args.pretty)
            return EXIT_OK
        if args.command == "verify-tightness":
            emit(cmd_verify_tightness(args), args.pretty)
            return EXIT_OK
        if args.command == "fuzz":
            report, code = cmd_fuzz(args)
            emit(report, args.pretty)
            return code
        handler = _INSTANCE_COMMANDS[args.command]
        report = handler(args)
        emit(report, args.pretty)
        if args.verify and not report["result"]["verified"]:
            return EXIT_INTERNAL
        return EXIT_OK
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TheoremContradiction as exc:
        print(f"internal error (please report): {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
