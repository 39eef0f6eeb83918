"""Batch command-line front end for reproduction runs.

Subcommands: ``gamma`` (exact minimum weight), ``verify`` (check a
labeling file), ``construct`` (emit a family scheme), ``bounds``
(closed-form bound report), ``discharge`` (charge certificate),
``atlas`` (build / check / query the block database), and ``reproduce``
(the full claim suite). Reports are JSON on stdout; labelings and the
atlas are CSV files.

Exit codes: 0 success / valid, 1 invalid labeling or failed claims,
2 usage error, 3 size-limit refusal. The environment variable
``SDRD_SIZE_LIMIT`` overrides the branch-and-bound vertex cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import atlas as atlas_mod
from .bounds import bound_report, discharge, weight
from .constructions import (
    flower_snark,
    grid_2xm,
    petersen_even_odd,
    petersen_m1,
    petersen_m3,
    predicted_weight,
)
from .graphs import Graph, build_flower_snark, build_grid, build_petersen, parse_edge_list
from .labeling import Labeling, labeling_from_csv, labeling_to_csv, validate
from .solver import (
    DEFAULT_BNB_LIMIT,
    SizeLimitError,
    SolveSpec,
    brute_force,
    solve_bnb,
    solve_strip_dp,
)

_CONSTRUCTIONS = {
    "petersen-m1": (petersen_m1, build_petersen),
    "petersen-m3": (petersen_m3, build_petersen),
    "petersen-even": (petersen_even_odd, build_petersen),
    "snark": (flower_snark, build_flower_snark),
    "grid2xm": (grid_2xm, build_grid),
}


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["petersen", "grid", "snark"])
    p.add_argument("--m", type=int, help="family size parameter")
    p.add_argument("--k", type=int, default=1, help="petersen shift parameter")
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--cols", type=int)
    p.add_argument("--edges", help="edge-list file (header 'n m', then 'a b' lines)")


def _graph_from_args(args) -> Graph:
    if args.edges:
        with open(args.edges, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if args.family == "petersen":
        if args.m is None:
            raise UsageError("petersen needs --m")
        return build_petersen(args.m, args.k)
    if args.family == "grid":
        if args.cols is None:
            raise UsageError("grid needs --cols")
        return build_grid(args.rows, args.cols)
    if args.family == "snark":
        if args.m is None:
            raise UsageError("snark needs --m")
        return build_flower_snark(args.m)
    raise UsageError("specify a graph via --family ... or --edges FILE")


def _strip_topology(g: Graph) -> str | None:
    fam = g.family
    if fam.kind == "grid" and fam.params[0] == 2:
        return "open"
    if fam.kind == "petersen" and fam.params[1] == 1:
        return "cyclic"
    if fam.kind in ("block", "block_reduced"):
        return "open"
    return None


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_gamma(args) -> int:
    g = _graph_from_args(args)
    spec = SolveSpec(g, k=args.threshold)
    limit = int(os.environ.get("SDRD_SIZE_LIMIT", DEFAULT_BNB_LIMIT))
    method = args.method
    if method == "auto":
        method = "dp" if _strip_topology(g) else "bnb"
    t0 = time.perf_counter()
    if method == "dp":
        topo = _strip_topology(g)
        if topo is None:
            raise UsageError("the DP method needs a 2-row grid, P(m,1), or block graph")
        res = solve_strip_dp(spec, topo)
    elif method == "bnb":
        res = solve_bnb(spec, size_limit=limit)
    else:
        res = brute_force(spec)
    elapsed = time.perf_counter() - t0
    out_path = None
    if res.is_optimal and args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(labeling_to_csv(res.witness))
        out_path = args.out
    _emit(
        {
            "status": res.status,
            "min_weight": res.min_weight,
            "threshold": args.threshold,
            "method": method,
            "witness_csv": out_path,
            "elapsed_s": round(elapsed, 3),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    g = _graph_from_args(args)
    with open(args.labeling, encoding="utf-8") as fh:
        lab = labeling_from_csv(fh.read())
    exempt = frozenset(int(x) for x in args.exempt.split(",") if x.strip()) if args.exempt else frozenset()
    report = validate(g, lab, k=args.threshold, exempt=exempt)
    _emit(
        {
            "valid": report.valid,
            "weight": report.weight,
            "threshold": report.k,
            "exempt": sorted(report.exempt),
            "violations": [[v, cond] for v, cond in report.violations()],
        }
    )
    return 0 if report.valid else 1


def _cmd_construct(args) -> int:
    if args.family not in _CONSTRUCTIONS:
        raise UsageError(f"unknown construction family {args.family!r}")
    emit, _ = _CONSTRUCTIONS[args.family]
    lab = emit(args.m, args.k) if args.family == "petersen-even" else emit(args.m)
    w = weight(lab)
    family_key = "petersen-even" if args.family == "petersen-even" else args.family
    predicted = predicted_weight(family_key, args.m)
    if w != predicted:
        raise RuntimeError(f"emitted weight {w} != predicted {predicted}")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(labeling_to_csv(lab))
    _emit(
        {
            "family": args.family,
            "m": args.m,
            "weight": w,
            "predicted_weight": predicted,
            "out": args.out,
        }
    )
    return 0


def _cmd_bounds(args) -> int:
    g = _graph_from_args(args)
    if not g.is_cubic:
        raise UsageError("bound report applies to cubic graphs only")
    _emit(bound_report(g, args.threshold).to_dict())
    return 0


def _cmd_discharge(args) -> int:
    g = _graph_from_args(args)
    with open(args.labeling, encoding="utf-8") as fh:
        lab = labeling_from_csv(fh.read())
    report = validate(g, lab)
    if not report.valid:
        _emit({"valid": False, "violations": [[v, c] for v, c in report.violations()]})
        return 1
    cv = discharge(g, lab)
    _emit(
        {
            "valid": True,
            "quarter_charges": list(cv.quarter_charges),
            "min_quarters": cv.min_quarters,
            "total_quarters": cv.total_quarters,
            "weight": weight(lab),
            "conserved": cv.total_quarters == 4 * weight(lab),
            "min_charge_at_least_half": cv.min_quarters >= 2,
        }
    )
    return 0


def _record_rows(records) -> str:
    header = ",".join(atlas_mod._CSV_HEADER)
    lines = [header]
    for r in records:
        delta = "n/a" if r.delta is None else str(r.delta)
        wc = "inf" if r.minweight_C is None else str(r.minweight_C)
        wp = "inf" if r.minweight_Cprime is None else str(r.minweight_Cprime)
        lines.append(",".join([str(x) for x in r.d] + [wc, wp, delta]))
    return "\n".join(lines) + "\n"


def _cmd_atlas(args) -> int:
    if args.action == "build":
        atlas = atlas_mod.build_atlas(jobs=args.jobs)
        atlas_mod.export_atlas(atlas, args.db)
        print(f"wrote {len(atlas.records)} records to {args.db}")
        return 0
    atlas = atlas_mod.import_atlas(args.db)
    if args.action == "check":
        failures = 0
        for cr in atlas_mod.check_atlas(atlas):
            tag = "FINDING" if cr.soft else ("PASS" if cr.ok else "FAIL")
            if not cr.ok and not cr.soft:
                failures += 1
            print(f"{tag:8s} {cr.name}: {cr.detail}")
        return 0 if failures == 0 else 1
    # query
    records = list(atlas.records)
    if args.boundary:
        d = atlas_mod.as_constellation(args.boundary.split(","))
        records = [atlas.lookup(d)]
    if args.right_boundary:
        inner, outer = (int(x) for x in args.right_boundary.split(","))
        pred = atlas_mod.pinned_right_boundary(inner, outer)
        records = [r for r in records if pred(r)]
    if args.delta_at_least is not None:
        records = [r for r in records if r.delta is not None and r.delta >= args.delta_at_least]
    if args.center_weight is not None:
        records = [r for r in records if r.minweight_C == args.center_weight]
    if args.center_at_least is not None:
        records = [
            r for r in records if r.minweight_C is not None and r.minweight_C >= args.center_at_least
        ]
    if args.tight:
        tight = set(r.d for r in atlas_mod.tight_boundary_records(atlas))
        records = [r for r in records if r.d in tight]
    sys.stdout.write(_record_rows(records))
    return 0


def _cmd_reproduce(args) -> int:
    from .reproduce import run_all

    outcomes = run_all(quick=args.quick, jobs=args.jobs)
    width = max(len(o.name) for o in outcomes)
    failures = 0
    for o in outcomes:
        status = "SKIP" if o.skipped else ("PASS" if o.ok else "FAIL")
        if not o.ok and not o.skipped:
            failures += 1
        print(f"[{status:4s}] {o.name:<{width}}  {o.elapsed_s:7.2f}s  {o.detail}")
    print(f"{len(outcomes) - failures}/{len(outcomes)} criteria passing" + (" (quick mode)" if args.quick else ""))
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="sdrd", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="exact minimum weight of a graph")
    _add_graph_args(p)
    p.add_argument("--threshold", type=int, default=1, help="closed-neighborhood threshold k")
    p.add_argument("--method", choices=["auto", "bnb", "dp", "brute"], default="auto")
    p.add_argument("--out", default="witness.csv", help="witness CSV path ('' to skip)")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("verify", help="validate a labeling CSV against a graph")
    _add_graph_args(p)
    p.add_argument("--labeling", required=True)
    p.add_argument("--threshold", type=int, default=1)
    p.add_argument("--exempt", default="", help="comma-separated vertex ids to skip")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="emit a family labeling scheme")
    p.add_argument("--family", required=True, choices=sorted(_CONSTRUCTIONS))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=1, help="shift for petersen-even")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("bounds", help="closed-form bound report (cubic graphs)")
    _add_graph_args(p)
    p.add_argument("--threshold", type=int, default=1)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("discharge", help="discharging certificate for a labeling")
    _add_graph_args(p)
    p.add_argument("--labeling", required=True)
    p.set_defaults(func=_cmd_discharge)

    p = sub.add_parser("atlas", help="build, check, or query the block database")
    p.add_argument("action", choices=["build", "check", "query"])
    p.add_argument("--db", required=True, help="atlas CSV path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--boundary", help="single constellation d0,...,d7")
    p.add_argument("--right-boundary", help="inner,outer right-column pattern")
    p.add_argument("--delta-at-least", type=int)
    p.add_argument("--center-weight", type=int)
    p.add_argument("--center-at-least", type=int)
    p.add_argument("--tight", action="store_true", help="the five tight boundary cases")
    p.set_defaults(func=_cmd_atlas)

    p = sub.add_parser("reproduce", help="run the whole claim suite")
    p.add_argument("--quick", action="store_true", help="skip the multi-minute searches")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_reproduce)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
