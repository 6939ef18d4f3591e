"""Command-line front end: ``bona <command> [options]``.

Data goes to stdout (or ``--out PATH``), logging to stderr.  The default
output format comes from ``$BONA_FORMAT`` when set, else ``text``.

Exit codes: 0 success, 1 a check or assertion failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import numbers as nb
from . import permutations as pm
from . import polynomials as pl
from . import trees as tr
from .errors import DomainError, InconclusiveError
from .formats import FORMATS, intervals_to_json, poly_to_json, render_rows
from .poly import check_interlacing, isolate_roots
from .verify import SUITES, run_suite, summary

log = logging.getLogger("boolnarayana")

METHODS = ("explicit", "convolution", "series", "enumerate")


def _fraction(s: str) -> Fraction:
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None
    if f <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return f


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _patterns(s: str):
    try:
        return pm.parse_patterns(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS,
                        default=os.environ.get("BONA_FORMAT", "text"))
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--parallel", action="store_true",
                        help="use worker processes for exhaustive scans")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="bona", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="rows of BoNa(n,k)")
    t.add_argument("--n-max", type=_positive, required=True)
    t.add_argument("--method", choices=METHODS, default="explicit")

    q = sub.add_parser("poly", parents=[common], help="BoNa_n(u) or the Narayana polynomial")
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--family", choices=("bona", "narayana"), default="bona")

    r = sub.add_parser("roots", parents=[common], help="isolating intervals of BoNa_n")
    r.add_argument("--n", type=_positive, required=True)
    r.add_argument("--precision", type=_fraction, default=Fraction(1, 1000))

    m = sub.add_parser("perms", parents=[common], help="descent tables of stack-sorting preimages")
    g = m.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive)
    g.add_argument("--n-max", type=_positive)
    m.add_argument("--avoid", type=_patterns, default=pm.parse_patterns("231,312"),
                   help="comma-separated patterns, e.g. 231,312")
    m.add_argument("--sorted", action="store_true",
                   help="instead count permutations sorted to the identity")

    e = sub.add_parser("trees", parents=[common], help="dump 0-1 trees, one per line")
    e.add_argument("--n", type=_positive, required=True)
    e.add_argument("--histogram", action="store_true",
                   help="print the right-edge histogram instead of the trees")

    z = sub.add_parser("inject", parents=[common], help="apply the injection z to BoNa(n,k)")
    z.add_argument("--n", type=_positive, required=True)
    z.add_argument("--k", type=_positive, required=True)
    z.add_argument("--quiet", action="store_true", help="omit the per-tree transcript")

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-n", type=_positive)
    v.add_argument("--summary", metavar="PATH", help="also write the JSON summary to PATH")
    v.add_argument("--timings", action="store_true",
                   help="include wall times (makes output run-dependent)")
    return p


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    n = args.n_max
    if args.method == "explicit":
        tri = nb.explicit_table(n)
    elif args.method == "convolution":
        tri = nb.bona_convolution_table(n)
    elif args.method == "series":
        tri = nb.series_table(n)
    else:
        if n > tr.ENUMERATION_CAP:
            raise DomainError(f"enumeration is capped at n={tr.ENUMERATION_CAP}")
        tri = nb.Triangle.from_rows(
            [tr.right_edge_histogram(m, parallel=args.parallel) for m in range(1, n + 1)])
    rows = [(i, tri.row(i)) for i in range(1, n + 1)]
    _emit(render_rows(rows, args.format), args.out)
    return 0


def cmd_poly(args) -> int:
    p = pl.bona_poly(args.n) if args.family == "bona" else pl.narayana_poly(args.n)
    var = "u" if args.family == "bona" else "q"
    if args.format == "json":
        text = poly_to_json(p)
    elif args.format == "csv":
        text = "degree,coefficient\n" + "".join(f"{i},{c}\n" for i, c in enumerate(p.coeffs))
    else:
        text = p.format(var) + "\n"
    _emit(text, args.out)
    return 0


def _interval_text(lo: Fraction, hi: Fraction) -> str:
    if lo == hi:
        return f"{lo}  (exact)"
    return f"({lo}, {hi})  ~ {float((lo + hi) / 2):.6f}"


def cmd_roots(args) -> int:
    p = pl.bona_poly(args.n)
    ivs = isolate_roots(p, args.precision)
    verdict = None
    if args.n >= 3:
        try:
            verdict = "pass" if check_interlacing(p, pl.bona_poly(args.n - 1)) else "fail"
        except InconclusiveError:
            verdict = "inconclusive"
    if args.format == "json":
        doc = {"n": args.n, "precision": str(args.precision),
               "roots": intervals_to_json(ivs), "interlacing": verdict}
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = "index,lo,hi\n" + "".join(
            f"{i},{iv.lo},{iv.hi}\n" for i, iv in enumerate(ivs, start=1))
    else:
        lines = [f"BoNa_{args.n}: {len(ivs)} real root(s)"]
        lines += [_interval_text(iv.lo, iv.hi) for iv in ivs]
        if verdict is not None:
            lines.append(f"interlacing with BoNa_{args.n - 1}: {verdict}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if verdict in (None, "pass", "inconclusive") else 1


def cmd_perms(args) -> int:
    sizes = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    if args.sorted:
        rows = [(n, [pm.count_sorted_preimages(n)]) for n in sizes]
        if args.format == "json":
            text = json.dumps({"counts": [{"n": n, "value": str(v[0])} for n, v in rows]},
                              indent=2) + "\n"
        elif args.format == "csv":
            text = "n,value\n" + "".join(f"{n},{v[0]}\n" for n, v in rows)
        else:
            text = "".join(f"{n}: {v[0]}\n" for n, v in rows)
        _emit(text, args.out)
        return 0
    rows = []
    for n in sizes:
        table = pm.preimage_descent_table(n, args.avoid, parallel=args.parallel)
        rows.append((n, table.counts))
    pats = ["".join(map(str, q)) for q in args.avoid]
    _emit(render_rows(rows, args.format, patterns=pats), args.out)
    return 0


def cmd_trees(args) -> int:
    if args.histogram:
        row = tr.right_edge_histogram(args.n, parallel=args.parallel)
        _emit(render_rows([(args.n, row)], args.format, method="enumerate"), args.out)
        return 0
    trees = tr.enumerate_trees(args.n)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for t in trees:
                fh.write(tr.to_string(t) + "\n")
    else:
        write = sys.stdout.write
        for t in trees:
            write(tr.to_string(t) + "\n")
    return 0


def cmd_inject(args) -> int:
    n, k = args.n, args.k
    src = [t for t in tr.enumerate_trees(n) if t.right_edges == k - 1]
    pairs = []
    violations = 0
    images = set()
    roundtrip = True
    for t in src:
        z = tr.injection_z(t)
        if z.right_edges != t.right_edges + 1 or z.two_child != t.two_child:
            violations += 1
        if tr.injection_z_inverse(z) != t:
            roundtrip = False
        images.add(z)
        pairs.append((tr.to_string(t), tr.to_string(z)))
    injective = len(images) == len(src)
    ok = violations == 0 and injective and roundtrip
    if args.format == "json":
        doc = {"n": n, "k": k, "mapped": len(src), "violations": violations,
               "injective": injective, "roundtrip": roundtrip,
               "pairs": [] if args.quiet else [list(p) for p in pairs]}
        text = json.dumps(doc, indent=1, ensure_ascii=False) + "\n"
    elif args.format == "csv":
        text = "source,image\n" + "".join(f"{a},{b}\n" for a, b in pairs)
    else:
        lines = [] if args.quiet else [f"{a}  ->  {b}" for a, b in pairs]
        lines.append(f"BoNa({n},{k}) -> BoNa({n},{k + 1}): {len(src)} trees mapped, "
                     f"{violations} violations, injective={injective}, roundtrip={roundtrip}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    lines: list[str] = []

    def show(res):
        line = f"{'PASS' if res.passed else 'FAIL'}  {res.suite}/{res.name}: {res.detail}"
        if args.timings:
            line += f"  [{res.seconds:.2f}s]"
        if args.format == "text" and not args.out:
            print(line, flush=True)
        lines.append(line)

    results = run_suite(args.suite, args.max_n, args.parallel, on_result=show)
    doc = summary(results, args.suite, args.max_n)
    if not args.timings:
        for c in doc["checks"]:
            del c["seconds"]
    doc_text = json.dumps(doc, indent=2) + "\n"
    passed = sum(r.passed for r in results)
    tail = f"{passed}/{len(results)} checks passed"
    if args.format == "json":
        _emit(doc_text, args.out)
    elif args.format == "csv":
        _emit("suite,name,passed,detail\n" + "".join(
            f"{r.suite},{r.name},{r.passed},\"{r.detail}\"\n" for r in results), args.out)
    else:
        if args.out:
            _emit("\n".join(lines + [tail]) + "\n", args.out)
        else:
            print(tail)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(doc_text)
    return 0 if doc["passed"] else 1


COMMANDS = {
    "table": cmd_table,
    "poly": cmd_poly,
    "roots": cmd_roots,
    "perms": cmd_perms,
    "trees": cmd_trees,
    "inject": cmd_inject,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "inject" and not 2 * args.k <= args.n - 1:
        parser.error(f"inject needs k <= (n-1)/2, got n={args.n}, k={args.k}")
    if args.command == "trees" and args.n > tr.ENUMERATION_CAP:
        parser.error(f"--n is capped at {tr.ENUMERATION_CAP}")
    if args.command == "perms":
        top = args.n if args.n is not None else args.n_max
        if top > pm.PERMUTATION_CAP:
            parser.error(f"--n is capped at {pm.PERMUTATION_CAP}")
    try:
        return COMMANDS[args.command](args)
    except DomainError as e:
        parser.error(str(e))
    except BrokenPipeError:  # pragma: no cover
        return 0


if __name__ == "__main__":
    sys.exit(main())
