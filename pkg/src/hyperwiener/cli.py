"""Command-line front end: ``hyperwiener <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad input, refused
method), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from . import generators
from .hypergraph import Hypergraph
from .io import parse_cuts, parse_hypergraph, write_cuts, write_hypergraph
from .metric import wiener_brute
from .structure import recognize, theta_structure
from .wiener import (CutPartition, InvalidCutPartition, NotAHypertree, WienerBreakdown,
                     check_hypertree, validate_cut_partition, wiener_cut, wiener_general,
                     wiener_hypertree)


class CommandError(Exception):
    pass


def _read(path: str, args) -> Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_hypergraph(text, allow_singleton_edges=args.allow_singleton_edges)


def _emit(args, out, payload: dict, plain: str) -> None:
    if args.json:
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(plain.rstrip("\n") + "\n")


def _write_text(text: str, dest: str | None, out) -> None:
    if dest is None or dest == "-":
        out.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def cmd_gen(args, out) -> int:
    fam, params = args.family, args.params
    cuts = None
    try:
        if fam == "cube":
            k, n = (int(p) for p in params)
            H, _ = generators.cube(k, n)
        elif fam == "phenylene":
            (n,) = (int(p) for p in params)
            H = generators.phenylene(n)
            cuts = CutPartition.singletons(H)
        elif fam == "hypertree":
            H = generators.random_hypertree([int(p) for p in params], seed=args.seed)
            cuts = CutPartition.singletons(H)
        elif fam == "single":
            (k,) = (int(p) for p in params)
            H = generators.single_edge(k)
        elif fam == "t1":
            if params:
                raise ValueError
            H = generators.example_t1()
            cuts = CutPartition.singletons(H)
        else:  # clar
            if params:
                raise ValueError
            H, cuts = generators.example_clar()
    except ValueError as err:
        if isinstance(err, generators.BadParameter):
            raise
        raise CommandError(f"bad parameters for {fam}: {' '.join(params) or '(none)'}") from None
    _write_text(write_hypergraph(H), args.output, out)
    if args.cuts_out:
        if cuts is None:
            raise CommandError(f"no canonical cut partition for family {fam}")
        _write_text(write_cuts(cuts), args.cuts_out, out)
    return 0


def _auto(H: Hypergraph, cuts: CutPartition | None) -> WienerBreakdown:
    report = recognize(H)
    if report.verdict:
        return wiener_cut(H)
    try:
        check_hypertree(H)
        return wiener_hypertree(H)
    except NotAHypertree:
        pass
    for candidate in ([cuts] if cuts is not None else []) + [CutPartition.singletons(H)]:
        try:
            return wiener_general(H, candidate)
        except InvalidCutPartition:
            continue
    return WienerBreakdown(wiener_brute(H), "brute")


def cmd_wiener(args, out) -> int:
    H = _read(args.file, args)
    cuts = None
    if args.cuts:
        cuts = parse_cuts(Path(args.cuts).read_text(encoding="utf-8"), H)
    t0 = time.perf_counter_ns()
    if args.method == "brute":
        result = WienerBreakdown(wiener_brute(H, threads=args.threads), "brute")
    elif args.method == "cut":
        result = wiener_cut(H)
    elif args.method == "tree":
        result = wiener_hypertree(H)
    elif args.method == "general":
        result = wiener_general(H, cuts if cuts is not None else CutPartition.singletons(H),
                                prevalidated=args.prevalidated)
    else:
        result = _auto(H, cuts)
    nanos = time.perf_counter_ns() - t0
    payload = {"method": result.method, "value": result.total,
               "breakdown": result.as_dict(), "timings": {"nanos": nanos}}
    plain = str(result.total)
    if args.verbose:
        lines = [f"method {result.method}"]
        for t in result.per_cut:
            lines.append(f"cut {t.index} edges={t.edges} sizes={t.sizes} contribution={t.contribution}")
        if result.residual_pairs:
            lines.append(f"residual {result.residual} over {len(result.residual_pairs)} pairs")
        plain = "\n".join(lines + [plain])
    _emit(args, out, payload, plain)
    return 0


def cmd_recognize(args, out) -> int:
    H = _read(args.file, args)
    report = recognize(H, validate_convexity=args.validate_convexity)
    d = report.as_dict()
    lines = [f"verdict: {'yes' if report.verdict else 'no'} ({report.reason})"]
    lines += [f"{k}: {v}" for k, v in d.items() if k not in ("verdict", "reason")]
    _emit(args, out, {"method": "recognize", "value": report.verdict, "breakdown": d,
                      "timings": {}}, "\n".join(lines))
    return 0


def cmd_theta(args, out) -> int:
    H = _read(args.file, args)
    ts = theta_structure(H)
    classes = [{"edges": c.edges, "sizes": c.sizes} for c in ts.classes]
    lines = [f"class {i}: edges={c['edges']} sizes={c['sizes']}" for i, c in enumerate(classes)]
    _emit(args, out, {"method": "theta", "value": len(classes),
                      "breakdown": {"classes": classes}, "timings": {}}, "\n".join(lines))
    return 0


def cmd_cuts_validate(args, out) -> int:
    H = _read(args.file, args)
    C = parse_cuts(Path(args.cuts).read_text(encoding="utf-8"), H)
    report = validate_cut_partition(H, C, force=args.force)
    d = report.as_dict()
    lines = [f"method_valid: {report.method_valid}",
             f"coverage_identity: {report.coverage_identity}"]
    for c in d["cuts"]:
        flags = " ".join(f"{k}={v}" for k, v in c.items() if k != "index")
        lines.append(f"cut {c['index']}: {flags}")
    lines.append(f"unseparated_pairs: {len(report.unseparated_pairs)}")
    _emit(args, out, {"method": "cuts-validate", "value": report.method_valid,
                      "breakdown": d, "timings": {}}, "\n".join(lines))
    return 0


def cmd_bench(args, out) -> int:
    families = [bench_mod.parse_family(tok) for tok in args.families]
    records = bench_mod.run_bench(families, repeats=args.repeats)
    _write_text(bench_mod.to_csv(records), args.csv, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    common.add_argument("--allow-singleton-edges", action="store_true",
                        help="drop one-vertex edges with a warning instead of failing")

    parser = argparse.ArgumentParser(prog="hyperwiener", parents=[common],
                                     description="Wiener index of hypergraphs by the cut method")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a generated hypergraph")
    p.add_argument("family", choices=["cube", "phenylene", "hypertree", "t1", "clar", "single"])
    p.add_argument("params", nargs="*",
                   help="cube: K N; phenylene: N; hypertree: edge sizes; single: K")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--cuts-out", help="also write the family's canonical cut partition")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("wiener", parents=[common], help="compute the Wiener index")
    p.add_argument("file")
    p.add_argument("--method", choices=["brute", "cut", "tree", "general", "auto"],
                   default="auto")
    p.add_argument("--cuts", help="cut partition file (general/auto)")
    p.add_argument("--prevalidated", action="store_true",
                   help="skip exhaustive validation of the cut partition")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes for the brute-force BFS fan-out")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("recognize", parents=[common],
                       help="test for a k-uniform partial cube-hypergraph")
    p.add_argument("file")
    p.add_argument("--validate-convexity", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("theta", parents=[common], help="list Θ-classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("cuts-validate", parents=[common], help="validate a cut partition")
    p.add_argument("file")
    p.add_argument("--cuts", required=True)
    p.add_argument("--force", action="store_true", help="validate above the size limit")
    p.set_defaults(func=cmd_cuts_validate)

    p = sub.add_parser("bench", parents=[common], help="benchmark methods, CSV output")
    p.add_argument("--families", nargs="*", default=[],
                   help="tokens like phenylene:8,16,32 cube:2x3,3x2 hypertree:3x10")
    p.add_argument("--csv", help="output file (default stdout)")
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdout)
    except (ValueError, KeyError, OSError, RuntimeError, CommandError) as err:
        stderr.write(f"hyperwiener: error: {err}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
