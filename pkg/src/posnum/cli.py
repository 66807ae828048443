"""Command-line interface.

Exit codes: 0 success, 1 verification failure or counterexample,
2 usage error, 3 graph6 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .enumeration import NATIVE_MAX_ORDER, enumerate_connected, enumerate_graphs, ingest_graph6
from .families import (
    FAMILIES,
    FamilyParameterError,
    FamilyPreconditionError,
    build_family,
    family_claims,
)
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .graphs import Graph, diameter
from .position import (
    DisconnectedGraphError,
    PositionKind,
    position_number,
    position_violation,
    verify_violation,
)
from .records import append_records, load_records
from .report import write_report
from .search import (
    check_family_claims,
    circulant_diameter2_mp2,
    diameter2_mp2_exists,
    ex_minus,
    gex,
    mex,
    mu,
    results_dir,
    search_diameters,
    verify_record,
    verify_theorems,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _read_graphs(spec: str):
    """Graphs from a graph6 argument, or stdin lines when spec is '-'."""
    if spec == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield parse_graph6(line)
    else:
        yield parse_graph6(spec)


def _cmd_pos(args) -> int:
    kinds = [PositionKind.MONOPHONIC, PositionKind.GEODESIC]
    if args.kind != "both":
        kinds = [PositionKind.coerce(args.kind)]
    status = EXIT_OK
    for g in _read_graphs(args.graph):
        parts = []
        for kind in kinds:
            w = position_number(g, kind, allow_disconnected=args.include_disconnected)
            members = ",".join(map(str, sorted(w.members)))
            parts.append(f"{kind.value}={w.value} [{members}]")
        print(f"{serialize_graph6(g)}: " + " ".join(parts))
    return status


def _cmd_check(args) -> int:
    g = parse_graph6(args.graph)
    members = [int(x) for x in args.set.split(",") if x != ""]
    cert = position_violation(g, members, args.kind,
                              allow_disconnected=args.include_disconnected)
    if cert is None:
        print(f"ok: set {{{args.set}}} is in {args.kind} position")
        return EXIT_OK
    if not verify_violation(g, members, args.kind, cert):
        print("internal error: certificate failed re-verification", file=sys.stderr)
        return EXIT_FAIL
    path = ",".join(map(str, cert.path))
    hits = ",".join(map(str, cert.hits))
    print(f"violation: path {path} carries set members {hits}")
    return EXIT_FAIL


def _parse_family_params(name: str, raw: list[str]):
    fam = FAMILIES[name]
    if fam.takes_graph:
        return [], parse_graph6(raw[0])
    if fam.takes_list:
        return [int(x) for x in raw], None
    if name == "circulant":
        conns = [int(x) for x in raw[1].split(",") if x]
        return [int(raw[0]), conns], None
    return [int(x) for x in raw], None


def _cmd_family(args) -> int:
    name = args.name
    if name not in FAMILIES:
        print(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}",
              file=sys.stderr)
        return EXIT_USAGE
    params, h = _parse_family_params(name, args.params)
    g = build_family(name, params, h=h)
    print(serialize_graph6(g))
    if args.claims:
        claims = family_claims(name, params, h=h)
        if claims is None:
            print("no closed-form claims for this family")
            return EXIT_OK
        fails = check_family_claims(g, claims, label=name)
        bits = [f"order={g.n}"]
        for key, val in claims.as_dict().items():
            if key == "order":
                continue
            bits.append(f"{key}={val}")
        if fails:
            print(" ".join(bits) + "  FAILED")
            for f in fails:
                print("  " + f)
            return EXIT_FAIL
        print(" ".join(bits) + "  (all ok)")
    return EXIT_OK


def _cmd_enum(args) -> int:
    shard = None
    if args.shard:
        i, k = args.shard.split("/")
        shard = (int(i), int(k))
    if args.all:
        if shard is not None:
            print("--shard applies to connected enumeration only", file=sys.stderr)
            return EXIT_USAGE
        graphs = enumerate_graphs(args.n)
    else:
        graphs = enumerate_connected(args.n, shard=shard)
    count = 0
    for g in graphs:
        print(serialize_graph6(g))
        count += 1
    print(f"# {count} graphs of order {args.n}", file=sys.stderr)
    return EXIT_OK


def _out_dir(args) -> str:
    out = args.out or results_dir() or "posnum-results"
    os.makedirs(out, exist_ok=True)
    return out


def _finish_search(args, rec) -> int:
    out = _out_dir(args)
    append_records(os.path.join(out, f"{rec.kind}.jsonl"), [rec])
    print(json.dumps({k: v for k, v in rec.__dict__.items()
                      if k not in ("witnesses",)}, default=str, sort_keys=True))
    if rec.witnesses:
        shown = rec.witnesses[:5]
        print("witnesses: " + " ".join(w if isinstance(w, str) else w["g6"] for w in shown)
              + (" ..." if len(rec.witnesses) > 5 else ""))
    anomalies = getattr(rec, "anomalies", [])
    return EXIT_FAIL if anomalies else EXIT_OK


def _cmd_search(args) -> int:
    cache = args.out or results_dir() or "posnum-results"
    if args.query == "mu":
        rec = mu(args.a, args.b, args.cap, source=args.stream, cache_dir=cache,
                 shards=args.shards, jobs=args.jobs,
                 space="all" if args.include_disconnected else "connected")
    elif args.query == "mex":
        rec = mex(args.n, args.a, args.mode, source=args.stream, cache_dir=cache)
    elif args.query == "gex":
        rec = gex(args.n, args.a, args.mode, source=args.stream, cache_dir=cache)
    elif args.query == "exminus":
        rec = ex_minus(args.n, args.a, args.b, args.mode, source=args.stream,
                       cache_dir=cache)
    elif args.query == "diam":
        rec = search_diameters(args.n, args.a, args.mode, source=args.stream,
                               cache_dir=cache)
    elif args.query == "diam2":
        rec = diameter2_mp2_exists(args.n, source=args.stream, cache_dir=cache)
    elif args.query == "circulant":
        rec = circulant_diameter2_mp2(args.n)
    else:
        return EXIT_USAGE
    return _finish_search(args, rec)


def _cmd_verify(args) -> int:
    if args.records:
        fails = []
        for rec in load_records(args.records):
            fails += verify_record(rec)
        if fails:
            for f in fails:
                print("FAIL " + f)
            return EXIT_FAIL
        print("all records re-verified")
        return EXIT_OK
    report = verify_theorems(args.profile, cache_dir=results_dir(args.out))
    for suite in report.suites:
        mark = "PASS" if suite.ok else "FAIL"
        print(f"{mark} {suite.name}: {suite.cases} cases ({suite.seconds:.1f}s)")
        for f in suite.failures[:10]:
            print("     " + f)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_report(args) -> int:
    out = args.out or os.path.join(args.results_dir, "report")
    written = write_report(args.results_dir, out, fmt=args.format,
                           figures=not args.no_figures)
    for path in written:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="posnum",
        description="Exact monophonic/general position numbers, graph families, "
                    "and extremal searches over small graphs.",
        epilog=f"Native enumeration covers n <= {NATIVE_MAX_ORDER}; larger orders "
               f"need an external graph6 stream (--stream). Results directory "
               f"defaults to $POSNUM_RESULTS.",
    )
    p.add_argument("--version", action="version", version=f"posnum {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("pos", help="compute position numbers with witnesses")
    sp.add_argument("graph", help="graph6 string, or - for stdin lines")
    sp.add_argument("--kind", choices=["mp", "gp", "both"], default="both")
    sp.add_argument("--include-disconnected", action="store_true")
    sp.set_defaults(fn=_cmd_pos)

    sp = sub.add_parser("check", help="check whether a vertex set is in position")
    sp.add_argument("graph")
    sp.add_argument("--set", required=True, help="comma-separated vertex list")
    sp.add_argument("--kind", choices=["mp", "gp"], required=True)
    sp.add_argument("--include-disconnected", action="store_true")
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("family", help="emit a named family graph as graph6")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*")
    sp.add_argument("--claims", action="store_true",
                    help="verify the family's closed-form claims")
    sp.set_defaults(fn=_cmd_family)

    sp = sub.add_parser("enum", help="enumerate graphs of one order, one per class")
    sp.add_argument("n", type=int)
    sp.add_argument("--shard", help="i/k: emit only shard i of k")
    sp.add_argument("--all", action="store_true", help="include disconnected graphs")
    sp.set_defaults(fn=_cmd_enum)

    sp = sub.add_parser("search", help="run an extremal search and persist the record")
    q = sp.add_subparsers(dest="query", required=True)

    def common(x):
        x.add_argument("--stream", help="external graph6 file for orders beyond 9")
        x.add_argument("--out", help="results directory (default $POSNUM_RESULTS)")
        x.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        x.add_argument("--shards", type=int, default=1)
        x.add_argument("--include-disconnected", action="store_true")
        x.set_defaults(fn=_cmd_search)

    x = q.add_parser("mu", help="smallest order with mp=a, gp=b")
    x.add_argument("a", type=int)
    x.add_argument("b", type=int)
    x.add_argument("--cap", type=int, default=8, dest="cap")
    common(x)
    for name, maximize in (("mex", True), ("gex", True)):
        x = q.add_parser(name, help=f"largest size with given {'mp' if name == 'mex' else 'gp'}")
        x.add_argument("n", type=int)
        x.add_argument("a", type=int)
        x.add_argument("--mode", choices=["exhaustive", "bounds"], default="exhaustive")
        common(x)
    x = q.add_parser("exminus", help="smallest size with mp=a, gp=b")
    x.add_argument("n", type=int)
    x.add_argument("a", type=int)
    x.add_argument("b", type=int)
    x.add_argument("--mode", choices=["exhaustive", "bounds"], default="exhaustive")
    common(x)
    x = q.add_parser("diam", help="achievable diameters for order n, mp-number a")
    x.add_argument("n", type=int)
    x.add_argument("a", type=int)
    x.add_argument("--mode", choices=["exhaustive", "constructive"], default="exhaustive")
    common(x)
    x = q.add_parser("diam2", help="existence of diameter-2 mp-2 graphs of order n")
    x.add_argument("n", type=int)
    common(x)
    x = q.add_parser("circulant", help="circulant diameter-2 mp-2 scan at order n")
    x.add_argument("n", type=int)
    common(x)

    sp = sub.add_parser("verify", help="run the theorem/claims suites or re-check records")
    sp.add_argument("--profile", choices=["quick", "full"], default="quick")
    sp.add_argument("--records", help="re-verify a saved records file instead")
    sp.add_argument("--out", help="results directory for classification caching")
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("report", help="render tables and figures from saved records")
    sp.add_argument("results_dir")
    sp.add_argument("--format", choices=["md", "csv"], default="md")
    sp.add_argument("--out", help="output directory (default <results>/report)")
    sp.add_argument("--no-figures", action="store_true")
    sp.set_defaults(fn=_cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except Graph6Error as exc:
        print(f"graph6 error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FamilyParameterError, ValueError) as exc:
        if isinstance(exc, (FamilyPreconditionError, DisconnectedGraphError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main():  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
