"""Command-line front end: ``hesspat {query,graph,patterns,profile,verify,enumerate}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .gkm import degree_table, fixed_point_mask, induced_subgraph, is_regular, to_dot
from .hessenberg import (
    HessenbergFunction,
    corresponding_generator,
    dimension_dh,
    ell_h,
    enumerate_hessenberg,
    generators,
    is_generator,
)
from .order import (
    TABLE_MAX_N,
    bruhat_interval,
    bruhat_leq,
    h_bruhat_leq,
    h_interval,
    saturated_chain,
)
from .patterns import GENERAL10, GENERATOR7, PATTERNS, avoids_all, pattern_table
from .perm_core import Permutation
from .verify import (
    PREDICATES,
    THEOREMS,
    default_jobs,
    find_counterexample,
    format_reports,
    sweep_rows,
    verify_theorem,
)
from .wellorg import profile

FORMATS = ("json", "text", "dot", "csv")
CSV_COLUMNS = ("w", "h", "is_generator", "regular", "min_deg", "max_deg", "avoided(B)", "avoided(C)", "first_witness")


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _hess(text: str) -> HessenbergFunction:
    try:
        return HessenbergFunction.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sizes(text: str) -> list[int]:
    """"6", "4-6" or "4,5,6"."""
    try:
        if "-" in text:
            a, b = text.split("-", 1)
            out = list(range(int(a), int(b) + 1))
        else:
            out = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed size list: {text!r}") from None
    if not out or any(k < 1 for k in out):
        raise argparse.ArgumentTypeError(f"sizes must be positive: {text!r}")
    return out


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")
    if args.perm is not None and args.hess is not None and args.perm.n != args.hess.n:
        raise UsageError(f"size mismatch: |perm| = {args.perm.n}, |hess| = {args.hess.n}")
    for extra in ("to",):
        other = getattr(args, extra, None)
        if other is not None and args.perm is not None and other.n != args.perm.n:
            raise UsageError(f"size mismatch: |perm| = {args.perm.n}, |{extra}| = {other.n}")
    n = getattr(args, "n", None)
    if isinstance(n, int) and args.perm is not None and n != args.perm.n:
        raise UsageError(f"size mismatch: --n {n} but |perm| = {args.perm.n}")


def _check_format(args, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} supports --format {', '.join(allowed)}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_query(args) -> tuple[str, int]:
    _need(args, "perm")
    _check_format(args, ("json", "text"))
    u, h = args.perm, args.hess
    out: dict = {"perm": str(u), "length": u.length()}
    if h is not None:
        out["hess"] = str(h)
        out["dim_Hh"] = dimension_dh(h)
        out["ell_h"] = ell_h(u, h)
        out["is_generator"] = is_generator(u, h)
        out["corresponding_generator"] = str(corresponding_generator(u, h))
        if u.n <= TABLE_MAX_N:
            out["fixed_points"] = int(fixed_point_mask(u.word, h).sum())
    if args.to is not None:
        v = args.to
        out["to"] = str(v)
        out["bruhat_leq"] = bruhat_leq(u, v)
        if u.n <= TABLE_MAX_N:
            out["bruhat_interval"] = [str(x) for x in bruhat_interval(u, v)]
        chain = saturated_chain(u, v) if out["bruhat_leq"] else None
        out["saturated_chain"] = None if chain is None else [str(x) for x in chain]
        if h is not None:
            out["h_bruhat_leq"] = h_bruhat_leq(u, v, h)
            if u.n <= TABLE_MAX_N - 1:
                out["h_interval"] = [str(x) for x in h_interval(u, v, h)]
            chain = saturated_chain(u, v, h) if out["h_bruhat_leq"] else None
            out["h_saturated_chain"] = None if chain is None else [str(x) for x in chain]
    if args.format == "json":
        return _dump(out), 0
    lines = []
    for k, v in out.items():
        if isinstance(v, list):
            v = " ".join(v)
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n", 0


def cmd_graph(args) -> tuple[str, int]:
    _need(args, "perm", "hess")
    w, h = args.perm, args.hess
    if w.n > TABLE_MAX_N:
        raise UsageError(f"graph export supports n <= {TABLE_MAX_N}")
    g = induced_subgraph(w, h)
    regular, (lo, hi) = is_regular(g)
    if args.format == "dot":
        return to_dot(g, show_excluded=args.show_excluded), 0
    if args.format == "csv":
        rows = [{"vertex": name, "degree": d} for name, d in degree_table(g)]
        return _csv(rows, ("vertex", "degree")), 0
    edges = [{"u": str(a), "v": str(b), "t": str(t)} for a, b, t in g.edges()]
    out = {
        "w": str(w),
        "h": str(h),
        "is_generator": is_generator(w, h),
        "vertices": [{"vertex": name, "degree": d} for name, d in degree_table(g)],
        "edges": edges,
        "regular": regular,
        "min_deg": lo,
        "max_deg": hi,
    }
    if args.format == "json":
        return _dump(out), 0
    lines = [
        f"Gamma_{{w,h}} for w={w}, h={h}: {len(g)} vertices, {len(edges)} edges, "
        f"{'regular' if regular else 'irregular'} degrees ({lo},{hi})"
    ]
    lines += [f"{name} {d}" for name, d in degree_table(g)]
    return "\n".join(lines) + "\n", 0


def cmd_patterns(args) -> tuple[str, int]:
    _need(args, "perm", "hess")
    _check_format(args, ("json", "text", "csv"))
    w, h = args.perm, args.hess
    table = pattern_table(w, h)
    rows = [{"pattern": name, "contained": wit is not None, "witness": "" if wit is None else str(wit)}
            for name, wit in table]
    avoid_b, wit_b = avoids_all(w, h, "generator7")
    avoid_c, wit_c = avoids_all(w, h, "general10")
    if args.format == "csv":
        return _csv(rows, ("pattern", "contained", "witness")), 0
    if args.format == "json":
        return _dump({
            "w": str(w),
            "h": str(h),
            "patterns": rows,
            "avoids_generator7": avoid_b,
            "avoids_general10": avoid_c,
        }), 0
    width = max(len(p) for p in PATTERNS)
    lines = [f"w={w} h={h}"]
    lines += [f"{r['pattern'].ljust(width)}  {r['witness'] or '-'}" for r in rows]
    lines.append(f"avoids B ({len(GENERATOR7)} patterns): {avoid_b}" + ("" if wit_b is None else f", first {wit_b.pattern}{wit_b}"))
    lines.append(f"avoids C ({len(GENERAL10)} patterns): {avoid_c}" + ("" if wit_c is None else f", first {wit_c.pattern}{wit_c}"))
    return "\n".join(lines) + "\n", 0


def cmd_profile(args) -> tuple[str, int]:
    _need(args, "perm")
    _check_format(args, ("json", "text"))
    p = profile(args.perm, args.hess)
    if args.format == "json":
        return _dump(p.to_dict()), 0
    d = p.to_dict()
    lines = [f"{k}: {d[k]}" for k in ("word", "y_values", "r", "is_well_organized", "kind")]
    lines.append("wbar_chain: " + (" -> ".join(d["wbar_chain"]) or "-"))
    return "\n".join(lines) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    _need(args)
    sizes = args.n if args.n is not None else None
    if sizes is None:
        if args.perm is not None:
            sizes = [args.perm.n]
        elif args.hess is not None:
            sizes = [args.hess.n]
        else:
            raise UsageError("--n is required for verify")
    for k in sizes:
        if args.perm is not None and args.perm.n != k or args.hess is not None and args.hess.n != k:
            raise UsageError(f"size mismatch between --n {k} and --perm/--hess")
    if args.format == "csv":
        rows = []
        for k in sizes:
            for r in sweep_rows(k, args.hess):
                if args.perm is not None and r["w"] != str(args.perm):
                    continue
                r["avoided(B)"] = r.pop("avoided_B")
                r["avoided(C)"] = r.pop("avoided_C")
                rows.append(r)
        return _csv(rows, CSV_COLUMNS), 0
    _check_format(args, ("json", "text"))
    if args.predicate:
        results = []
        for k in sizes:
            hit = find_counterexample(args.predicate, k)
            results.append({
                "predicate": args.predicate,
                "description": PREDICATES[args.predicate][0],
                "n": k,
                "counterexample": None if hit is None else {"w": str(hit[0]), "h": str(hit[1]), "detail": hit[2]},
            })
        if args.format == "json":
            return _dump({"counterexample_search": results}), 0
        lines = []
        for r in results:
            c = r["counterexample"]
            found = "none" if c is None else f"w={c['w']} h={c['h']}: {c['detail']}"
            lines.append(f"{r['predicate']} n={r['n']}: {found}")
        return "\n".join(lines) + "\n", 0
    ids = args.theorem or ["T-main"]
    if ids == ["all"]:
        ids = list(THEOREMS)
    reports = [
        verify_theorem(
            t, sizes, jobs=args.jobs, perm=args.perm, hess=args.hess,
            time_limit=args.time_limit, sample=args.sample, seed=args.seed_scale,
        )
        for t in ids
    ]
    if not args.timing:
        for r in reports:
            r.wall_time = 0.0
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        body = {"status": "PASS" if status == 0 else "FAIL", "reports": [r.to_dict() for r in reports]}
        if not args.timing:
            for r in body["reports"]:
                r["wall_time"] = None
        return _dump(body), status
    text = format_reports(reports)
    notes = sorted({note for r in reports for note in r.notes})
    text += "".join(f"note: {note}\n" for note in notes)
    return text, status


def cmd_enumerate(args) -> tuple[str, int]:
    _check_format(args, ("json", "text", "csv"))
    if args.hess is not None:
        h = args.hess
        gens = [str(g) for g in generators(h)]
        if args.format == "json":
            return _dump({"h": str(h), "generators": gens, "count": len(gens)}), 0
        if args.format == "csv":
            return _csv([{"generator": g} for g in gens], ("generator",)), 0
        return "\n".join(gens) + "\n", 0
    if args.n is None or len(args.n) != 1:
        raise UsageError("enumerate needs --hess, or a single --n")
    hs = enumerate_hessenberg(args.n[0])
    rows = [{"h": str(h), "dim": dimension_dh(h), "generators": len(generators(h))} for h in hs]
    if args.format == "json":
        return _dump({"n": args.n[0], "hessenberg_functions": rows, "count": len(rows)}), 0
    if args.format == "csv":
        return _csv(rows, ("h", "dim", "generators")), 0
    return "\n".join(f"{r['h']} dim={r['dim']} generators={r['generators']}" for r in rows) + "\n", 0


COMMANDS = {
    "query": cmd_query,
    "graph": cmd_graph,
    "patterns": cmd_patterns,
    "profile": cmd_profile,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_sizes, help="size, or a list/range such as 4-6")
    common.add_argument("--hess", type=_hess, help="Hessenberg function, e.g. 3,3,4,4")
    common.add_argument("--perm", type=_perm, help="permutation in one-line notation, e.g. 2134")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $HESSPAT_JOBS or 1)")
    common.add_argument("--seed-scale", type=int, default=0, help="seed for sampled sweeps (--sample)")

    parser = argparse.ArgumentParser(prog="hesspat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    q = sub.add_parser("query", parents=[common], help="order relations, intervals, generator data")
    q.add_argument("--to", type=_perm, help="second permutation for comparisons and intervals")
    g = sub.add_parser("graph", parents=[common], help="Gamma_{w,h} as DOT/CSV/JSON")
    g.add_argument("--show-excluded", action="store_true", help="also draw S_n vertices outside Gamma_{w,h}")
    sub.add_parser("patterns", parents=[common], help="witnesses of all eleven associated patterns")
    sub.add_parser("profile", parents=[common], help="well-organized profile as JSON")
    v = sub.add_parser("verify", parents=[common], help="exhaustive verification sweeps")
    v.add_argument("--theorem", action="append", choices=list(THEOREMS) + ["all"], help="repeatable; default T-main")
    v.add_argument("--predicate", choices=list(PREDICATES), help="run a counterexample search instead")
    v.add_argument("--sample", type=int, default=None, help="check this many random pairs per size")
    v.add_argument("--time-limit", type=float, default=None, help="seconds before the sweep stops (incomplete)")
    v.add_argument("--timing", action="store_true", help="include wall times (output no longer byte-stable)")
    sub.add_parser("enumerate", parents=[common], help="Hessenberg functions of n, or generators of h")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = default_jobs()
    elif args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.command not in ("verify", "enumerate") and args.n is not None:
        if len(args.n) != 1:
            parser.error("--n takes a single size here")
        args.n = args.n[0]
    try:
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
