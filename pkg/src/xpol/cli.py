"""``xpol`` command line: build, verify, report, check and sweep.

Exit codes: 0 on success or a passing verification, 1 when a check fails,
2 for usage errors (bad parameters, unreadable input, face limit exceeded).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .complex import (
    FaceLimitError,
    NotAFaceError,
    PureComplex,
    coords_of,
    face_str,
    f_vector,
    flag_vectors,
    h_vector,
    star,
    x,
)
from .crosspoly import build_B, build_boundary, build_complement, check_params
from .enumeration import (
    boundary_g_vector,
    flag_h_prime_vector,
    h_prime,
    sparla_check,
    sparla_counterexample_report,
    sparla_evaluate_boundary,
)
from .homology import betti, reduced_homology
from .shelling import ShellingError, verify_shelling
from .verify import SUITES, SWEEP_SUITES, run_suites, summarize, sweep

TARGETS = ("B", "complement", "boundary", "star")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_target(i: int, d: int, target: str) -> PureComplex:
    if target == "B":
        check_params(i, d)
        if i < 0:
            raise ValueError("B(-1,d) is void")
        return build_B(i, d)
    if target == "complement":
        return build_complement(i, d)
    if target == "boundary":
        return build_boundary(i, d)
    if target == "star":
        return star(build_target(i, d, "B"), x(d))
    raise ValueError(f"unknown target {target!r}")


def _colour_key(mask: int) -> str:
    return ",".join(map(str, coords_of(mask))) or "-"


# -- commands ----------------------------------------------------------------

def cmd_build(args) -> int:
    K = build_target(args.i, args.d, args.target)
    _emit(io.dumps(K, args.format), args.out)
    return 0


def _load(args) -> PureComplex | None:
    if not args.input:
        return None
    try:
        return io.read_complex(args.input, args.d)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc


def cmd_verify(args) -> int:
    suite = args.suite_pos or args.suite or "all"
    if suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {suite!r}")
    suites = SUITES if suite == "all" else (suite,)
    K = _load(args)
    if K is not None and K.d != args.d:
        raise UsageError(f"input lives in dimension {K.d}, not --d {args.d}")
    checks = run_suites(args.i, args.d, suites, K=K, jobs=args.jobs)
    if args.order:
        checks.append(_order_check(K if K is not None else build_B(args.i, args.d), args.order))
    report = {"i": args.i, "d": args.d, "suite": suite, "checks": checks, **summarize(checks)}
    if args.input:
        report["input"] = Path(args.input).name
    _emit(_dump(report), args.out)
    return 0 if report["ok"] else 1


def _order_check(K: PureComplex, path: str) -> dict:
    order = io.read_order(Path(path).read_text())
    check = {"suite": "shelling", "check": "given order", "claim": "the given order is a shelling"}
    try:
        restrictions = verify_shelling(K, order)
    except ShellingError as exc:
        return {**check, "ok": False, "detail": {"index": exc.index, "facet": face_str(exc.facet),
                                                  "minimal": [face_str(m) for m in exc.minimal]}}
    except ValueError as exc:
        return {**check, "ok": False, "detail": str(exc)}
    return {**check, "ok": True, "detail": [face_str(r) for r in restrictions]}


def _vectors(i: int, d: int) -> dict:
    B = build_B(i, d)
    fS, hS = flag_vectors(B)
    hpS = flag_h_prime_vector(B)
    out = {
        "i": i,
        "d": d,
        "f": f_vector(B),
        "h": h_vector(B),
        "h_prime": h_prime(B),
        "betti": betti(B),
        "flag": {_colour_key(m): {"f": fS[m], "h": hS[m], "h_prime": hpS[m]} for m in sorted(fS)},
    }
    if i <= d - 2:
        M = build_boundary(i, d)
        out["boundary"] = {"f": f_vector(M), "h": h_vector(M), "g": boundary_g_vector(i, d)}
    return out


def _vectors_text(v: dict) -> str:
    lines = [f"B({v['i']},{v['d']})"]
    for key in ("f", "h", "h_prime", "betti"):
        lines.append(f"  {key:<8}" + " ".join(f"{n:>6}" for n in v[key]))
    if "boundary" in v:
        lines.append("boundary")
        for key in ("f", "h", "g"):
            lines.append(f"  {key:<8}" + " ".join(f"{n:>6}" for n in v["boundary"][key]))
    hp = "h'_S"
    lines.append(f"  {'S':<{v['d'] * 2}} {'f_S':>8} {'h_S':>8} {hp:>6}")
    for S, row in v["flag"].items():
        lines.append(f"  {S:<{v['d'] * 2}} {row['f']:>8} {row['h']:>8} {row['h_prime']:>6}")
    return "\n".join(lines) + "\n"


def cmd_report(args) -> int:
    if args.what == "vectors":
        check_params(args.i, args.d)
        if args.i < 0:
            raise ValueError("B(-1,d) is void")
        v = _vectors(args.i, args.d)
        _emit(_dump(v) if args.format == "json" else _vectors_text(v), args.out)
        return 0
    K = build_target(args.i, args.d, args.target)
    groups = reduced_homology(K)
    doc = {
        "i": args.i,
        "d": args.d,
        "target": args.target,
        "reduced": [g.as_dict() for g in groups],
        "betti": betti(K, reduced=False),
    }
    _emit(_dump(doc), args.out)
    return 0


def cmd_check(args) -> int:
    if args.i is None:
        if args.chi is None or args.k is None:
            raise UsageError("give --i, or both --chi and --k")
        rep = sparla_check(args.chi, args.r, args.k)
        _emit(_dump(rep.as_dict()), args.out)
        return 0 if rep.holds else 1
    if args.r < 1 or not 0 <= args.i <= 2 * args.r:
        raise ValueError("need r >= 1 and 0 <= i <= 2r")
    if args.i < args.r and (args.r - args.i) % 2 == 0:
        cx = sparla_counterexample_report(args.r, args.i)
        doc = {"kind": "equality without skeleton", **cx.as_dict()}
        ok = cx.report.holds
    else:
        rep = sparla_evaluate_boundary(args.r, args.i)
        doc = {"kind": "evaluation", "i": args.i, "d": 2 * args.r + 2, "report": rep.as_dict()}
        ok = rep.holds
    _emit(_dump(doc), args.out)
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    suites = tuple(args.suites.split(",")) if args.suites else SWEEP_SUITES
    checks = sweep(args.d_max, suites, jobs=args.jobs)
    table: dict[str, dict] = {}
    for c in checks:
        row = table.setdefault(c["suite"], {"passed": 0, "failed": 0, "failures": []})
        if c["ok"]:
            row["passed"] += 1
        else:
            row["failed"] += 1
            row["failures"].append({"check": c["check"], "claim": c["claim"], "detail": c["detail"]})
    doc = {"d_max": args.d_max, "suites": list(suites), "table": table, **summarize(checks)}
    _emit(_dump(doc), args.out)
    return 0 if doc["ok"] else 1


# -- parser ------------------------------------------------------------------

def _add_id(p, need_i=True):
    p.add_argument("--i", type=int, required=need_i)
    p.add_argument("--d", type=int, required=True)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xpol", description="Switch-bounded subcomplexes of the cross-polytope.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="serialize B(i,d), its complement, boundary or the star of x_d")
    _add_id(p)
    p.add_argument("--target", choices=TARGETS, default="B")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite_pos", nargs="?", metavar="SUITE")
    _add_id(p)
    p.add_argument("--suite")
    p.add_argument("--input", help="facet file (JSON or text) to test instead of B(i,d)")
    p.add_argument("--order", help="facet order file to check as a shelling")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="face numbers or homology")
    p.add_argument("what", choices=("vectors", "homology"))
    _add_id(p)
    p.add_argument("--target", choices=TARGETS, default="B")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check", help="evaluate Sparla's inequality")
    p.add_argument("what", choices=("sparla",))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, help="evaluate on the boundary of B(i, 2r+2)")
    p.add_argument("--chi", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="property sweeps over all (i,d) with d <= d-max")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--suites", help="comma separated: " + ",".join(SWEEP_SUITES))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, NotAFaceError, FaceLimitError, OSError) as exc:
        print(f"xpol: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
