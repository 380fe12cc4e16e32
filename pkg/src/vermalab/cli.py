"""Command-line front end for the weight, module, and variety analyzers.

Exit codes: 0 for success or a passing verification, 1 for a failing
verification (the failing cases are printed as JSON), 2 for usage or
input errors.  With --json every result, including errors, is rendered
as canonical JSON with sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys

from .heisenberg import dimension_fit
from .modules import Undecided, dump_text
from .rootsys import CartanSpec, build_root_system, is_pr_regular, psi_set
from .sl2 import (
    Sl2Schema,
    build_simple,
    build_verma_r1,
    build_verma_r2,
    hyper_projectives,
    hyper_simples,
    restricted_projectives,
    run_sl2_suites,
    simple_key,
    steinberg,
)
from .verma import NEG_INFINITY, block_contains, classify, depth, depth_reduce


def _round_floats(obj):
    if isinstance(obj, float):
        return round(obj, 6)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def canon(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, rounded floats."""
    return json.dumps(_round_floats(obj), sort_keys=True, indent=2) + "\n"


def _emit(args, obj, text: str) -> None:
    if args.json:
        sys.stdout.write(canon(obj))
    else:
        sys.stdout.write(text + "\n")


def _parse_weight(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"weight {text!r} must be comma-separated integers") from None


def _cartan_spec(args) -> CartanSpec:
    if args.cartan is not None:
        return CartanSpec.parse(args.cartan)
    if args.type is not None:
        return CartanSpec.from_type(args.type)
    raise ValueError("one of --type or --cartan is required")


def _check_rank(rs, lam) -> None:
    if len(lam) != rs.rank:
        raise ValueError(
            f"weight has {len(lam)} coordinates but the root system has rank {rs.rank}"
        )


def _depth_str(d) -> str:
    return "-inf" if d == NEG_INFINITY else str(int(d))


def _cmd_depth(args) -> int:
    rs = build_root_system(_cartan_spec(args))
    lam = _parse_weight(args.weight)
    _check_rank(rs, lam)
    d = depth(rs, lam, args.p)
    _emit(
        args,
        {"lambda": list(lam), "p": args.p, "depth": _depth_str(d) if d == NEG_INFINITY else int(d)},
        _depth_str(d),
    )
    return 0


def _cmd_regular(args) -> int:
    rs = build_root_system(_cartan_spec(args))
    lam = _parse_weight(args.weight)
    _check_rank(rs, lam)
    reg = is_pr_regular(rs, lam, args.p, args.r)
    _emit(
        args,
        {"lambda": list(lam), "p": args.p, "r": args.r, "regular": reg},
        "true" if reg else "false",
    )
    return 0


def _cmd_psi(args) -> int:
    rs = build_root_system(_cartan_spec(args))
    lam = _parse_weight(args.weight)
    _check_rank(rs, lam)
    idx = psi_set(rs, lam, args.p, args.r)
    roots = [list(rs.positive_roots[i].coeffs) for i in idx]
    lines = [f"{i} {tuple(rs.positive_roots[i].coeffs)}" for i in idx]
    _emit(
        args,
        {"lambda": list(lam), "p": args.p, "r": args.r, "indices": list(idx), "roots": roots},
        "\n".join(lines) if lines else "(empty)",
    )
    return 0


def _cmd_classify(args) -> int:
    spec = _cartan_spec(args)
    lam = _parse_weight(args.weight)
    if len(lam) != spec.rank:
        raise ValueError(
            f"weight has {len(lam)} coordinates but the root system has rank {spec.rank}"
        )
    report = classify(spec, lam, args.p, args.r).to_json_dict()
    lines = [f"{k}: {json.dumps(_round_floats(v))}" for k, v in report.items()]
    _emit(args, report, "\n".join(lines))
    return 0


def _cmd_reduce(args) -> int:
    rs = build_root_system(_cartan_spec(args))
    lam = _parse_weight(args.weight)
    _check_rank(rs, lam)
    d, mu = depth_reduce(rs, lam, args.p, args.r)
    _emit(
        args,
        {"lambda": list(lam), "p": args.p, "r": args.r, "d": d, "mu": list(mu)},
        f"d {d} mu {','.join(str(x) for x in mu)}",
    )
    return 0


def _cmd_block(args) -> int:
    rs = build_root_system(_cartan_spec(args))
    lam = _parse_weight(args.weight)
    gamma = _parse_weight(args.gamma)
    _check_rank(rs, lam)
    _check_rank(rs, gamma)
    inside = block_contains(rs, gamma, lam, args.p, args.r)
    _emit(
        args,
        {
            "lambda": list(lam),
            "gamma": list(gamma),
            "p": args.p,
            "r": args.r,
            "contains": inside,
        },
        "true" if inside else "false",
    )
    return 0


def _cmd_verify_sl2(args) -> int:
    reports = run_sl2_suites(args.p, args.r, seed=args.seed)
    ok = all(rep.passed for rep in reports)
    if args.json:
        sys.stdout.write(
            canon({"checks": [rep.to_json_dict() for rep in reports], "pass": ok})
        )
    else:
        for rep in reports:
            state = "PASS" if rep.passed else "FAIL"
            sys.stdout.write(f"{rep.check}: {state} ({len(rep.cases)} cases)\n")
            if not rep.passed:
                bad = [c for c in rep.cases if not c.get("ok", False)]
                sys.stdout.write(canon({"check": rep.check, "failing_cases": bad}))
        sys.stdout.write(("all checks passed" if ok else "FAILED") + "\n")
    return 0 if ok else 1


def _cmd_verify_heisenberg(args) -> int:
    qs = [int(x) for x in args.qs.split(",")]
    tol = args.tol if args.tol is not None else (0.3 if args.r >= 3 else 0.15)
    fit = dimension_fit(args.r, qs, tol=tol)
    if args.json:
        sys.stdout.write(canon(fit.to_json_dict()))
    else:
        state = "PASS" if fit.passed else "FAIL"
        sys.stdout.write(
            f"slope {fit.slope:.6f} target {fit.target} tol {fit.tol}: {state}\n"
        )
        if not fit.passed:
            sys.stdout.write(canon(fit.to_json_dict()))
    return 0 if fit.passed else 1


def _build_module(kind: str, p: int, r: int, lam: int):
    schema = Sl2Schema(p, r)
    if kind == "steinberg":
        return steinberg(schema)
    if kind == "verma":
        return build_verma_r1(schema, lam) if r == 1 else build_verma_r2(schema, lam)
    if kind == "simple":
        if r == 1:
            return build_simple(schema, lam)
        try:
            return hyper_simples(p)[simple_key(lam)]
        except KeyError:
            raise ValueError(f"no level-2 simple of weight {lam}") from None
    if kind == "projective":
        table = restricted_projectives(p) if r == 1 else hyper_projectives(p)
        try:
            return table[simple_key(lam)]
        except KeyError:
            raise ValueError(f"no projective cover of weight {lam}") from None
    raise ValueError(f"unknown module kind {kind!r}")


def _cmd_dump_module(args) -> int:
    if args.kind != "steinberg" and args.weight is None:
        raise ValueError(f"--weight is required for kind {args.kind!r}")
    lam_vec = _parse_weight(args.weight) if args.weight is not None else (0,)
    if len(lam_vec) != 1:
        raise ValueError("module dumps cover rank one only: --weight takes one integer")
    mod = _build_module(args.kind, args.p, args.r, lam_vec[0])
    text = dump_text(mod)
    if args.out is not None:
        with open(args.out, "w") as fh:
            fh.write(text)
        sys.stdout.write(f"wrote {mod.dim}-dimensional module to {args.out}\n")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermalab",
        description="analyzers and verification suites for modular weight combinatorics",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, *, root=False, needs_r=True, weight=True):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="canonical JSON output")
        sp.add_argument("--text", action="store_true", help="plain text output (default)")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized subroutines")
        sp.add_argument("--p", type=int, required=True, help="prime")
        if root:
            sp.add_argument("--type", help="named type: A1, A2, B2, G2, A1xA1")
            sp.add_argument("--cartan", help="explicit Cartan rows, e.g. '2,-1;-1,2'")
        if needs_r:
            sp.add_argument("--r", type=int, required=True, help="Frobenius kernel level")
        if weight:
            sp.add_argument(
                "--weight", required=True, help="comma-separated fundamental-weight coordinates"
            )
        return sp

    add("depth", _cmd_depth, root=True, needs_r=False)
    add("regular", _cmd_regular, root=True)
    add("psi", _cmd_psi, root=True)
    add("classify", _cmd_classify, root=True)
    add("reduce", _cmd_reduce, root=True)
    bl = add("block", _cmd_block, root=True)
    bl.add_argument("--gamma", required=True, help="candidate weight, comma-separated")

    vs = sub.add_parser("verify-sl2")
    vs.set_defaults(fn=_cmd_verify_sl2)
    vs.add_argument("--json", action="store_true")
    vs.add_argument("--text", action="store_true")
    vs.add_argument("--seed", type=int, default=0)
    vs.add_argument("--p", type=int, required=True)
    vs.add_argument("--r", type=int, required=True)

    vh = sub.add_parser("verify-heisenberg")
    vh.set_defaults(fn=_cmd_verify_heisenberg)
    vh.add_argument("--json", action="store_true")
    vh.add_argument("--text", action="store_true")
    vh.add_argument("--seed", type=int, default=0)
    vh.add_argument("--r", type=int, required=True, help="number of generator pairs")
    vh.add_argument("--qs", required=True, help="comma-separated field sizes")
    vh.add_argument("--tol", type=float, default=None, help="slope tolerance")

    dm = sub.add_parser("dump-module")
    dm.set_defaults(fn=_cmd_dump_module)
    dm.add_argument("--json", action="store_true")
    dm.add_argument("--text", action="store_true")
    dm.add_argument("--seed", type=int, default=0)
    dm.add_argument("--p", type=int, required=True)
    dm.add_argument("--r", type=int, required=True)
    dm.add_argument("--weight", help="highest weight (single integer)")
    dm.add_argument(
        "--kind",
        default="verma",
        choices=["verma", "simple", "projective", "steinberg"],
        help="which module to construct",
    )
    dm.add_argument("--out", help="write the module text format to this path")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except Undecided as e:
        _emit(args, {"error": str(e)}, f"error: {e}")
        return 1
    except (ValueError, KeyError) as e:
        msg = str(e)
        _emit(args, {"error": msg}, f"error: {msg}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
