"""``bridgelab`` command line.

Exit codes: 0 success, 1 an ASSERT-level check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bridgelab import acceptance, codec, enumeration, series, verify
from bridgelab.classes import ClassSpec
from bridgelab.errors import BridgelabError, CapabilityError, InvalidArgument
from bridgelab.graphcore import Graph

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_USAGE = 2

CLASS_HELP = "graph class: all, forests, cycles>=K or cycles==K (K >= 3)"
CAPS = (
    f"caps: n <= {enumeration.GENERATED_CAP} for forests and cycle classes, "
    f"n <= {enumeration.ALL_GRAPHS_CAP} for all graphs"
)


class UsageError(Exception):
    pass


def _class(text: str) -> ClassSpec:
    try:
        return ClassSpec.parse(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def _render(reports: list[verify.Report], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        return "".join(f"# {r.name} class={r.cls} model={r.model}\n" + r.to_csv() for r in reports)
    return "".join(r.to_text() for r in reports)


def cmd_enumerate(args) -> int:
    if args.connected:
        s = enumeration.enumerate_connected(args.cls, args.n)
    else:
        s = enumeration.enumerate_all(args.cls, args.n, jobs=args.jobs)
    _emit(s.to_jsonl(), args.out)
    if args.out:
        print(f"{len(s)} unlabelled members of {args.cls} on {args.n} vertices -> {args.out}")
    return EXIT_OK


def cmd_count(args) -> int:
    rows = enumeration.count_table(args.cls, args.nmax, jobs=args.jobs)
    _emit(enumeration.count_table_csv(rows), args.out)
    return EXIT_OK


def _encode_file(args) -> int:
    g = Graph.from_text(Path(args.graph).read_text())
    enc = codec.encode(args.cls, g)
    back = codec.decode(args.cls, enc)
    print(f"root={enc.root} b={enc.b} rooted_code={enc.rooted_code().key}")
    print(f"roundtrip={'pass' if back == g else 'FAIL'}")
    sys.stdout.write(enc.h.to_text())
    return EXIT_OK if back == g else EXIT_ASSERT


def cmd_codec(args) -> int:
    if args.graph:
        return _encode_file(args)
    if args.n is None:
        raise UsageError("codec needs --n or --graph")
    enumeration.check_cap(args.cls, args.n)
    status = EXIT_OK
    print("n,unlabelled_total,rooted_connected,unlabelled_connected,bound,roundtrip")
    for n in range(1, args.n + 1):
        if args.roundtrip:
            try:
                row = codec.verify_injectivity_bound(args.cls, n)
                rt = "pass"
            except BridgelabError as exc:
                print(f"{n},error,{exc}")
                status = EXIT_ASSERT
                continue
        else:
            counts = enumeration.count_row(args.cls, n)
            row = codec.InjectivityRow(
                n, counts.unlabelled_total, counts.rooted_connected, counts.unlabelled_connected, 0, 0
            )
            rt = "skipped"
        bound = "pass" if row.first_bound and row.second_bound else "FAIL"
        if bound == "FAIL":
            status = EXIT_ASSERT
        print(f"{n},{row.unlabelled_total},{row.rooted_connected},{row.unlabelled_connected},{bound},{rt}")
    if args.emit:
        _emit(codec.codewords_jsonl(args.cls, args.n), args.emit)
    return status


def cmd_seq(args) -> int:
    if args.name not in series.SEQUENCES:
        raise UsageError(f"unknown sequence {args.name!r}; choose from {', '.join(series.SEQUENCES)}")
    fn, _cap = series.SEQUENCES[args.name]
    seq = fn(args.nmax)
    if args.format == "bfile":
        _emit(seq.bfile(), args.out)
    else:
        _emit(f"1..{args.nmax}: " + " ".join(map(str, seq.values)) + "\n", args.out)
    return EXIT_OK


def cmd_tau(args) -> int:
    t = series.otter_trees_seq(args.n)
    f = series.euler_transform(t)
    ratio = series.tau_ratio(args.n)
    print(f"n={args.n}")
    print(f"trees={t[args.n]}")
    print(f"forests={f[args.n]}")
    print(f"ratio={ratio}")
    print(f"decimal={ratio.dec}")
    print(f"target={verify.TARGETS.tau} diff={ratio.decimal() - verify.TARGETS.tau}")
    if 2 * args.n <= series.TREE_CAP:
        print(f"extrapolated_limit={series.tau_limit_estimate(args.n).decimal(12)}")
    return EXIT_OK


def cmd_renyi(args) -> int:
    ratio = series.renyi_ratio(args.n)
    print(f"n={args.n}")
    print(f"ratio={ratio}")
    print(f"decimal={ratio.dec}")
    print(f"target={verify.TARGETS.e_minus_half} diff={ratio.decimal() - verify.TARGETS.e_minus_half}")
    return EXIT_OK


def cmd_frag(args) -> int:
    report = verify.run_frag(args.cls, args.nmax, labelled=args.model == "labelled")
    _emit(_render([report], args.format), args.out)
    return EXIT_ASSERT if report.failed else EXIT_OK


def cmd_verify(args) -> int:
    reports = verify.verify_class(args.cls, args.nmax)
    _emit(_render(reports, args.format), args.out)
    return EXIT_ASSERT if any(r.failed for r in reports) else EXIT_OK


def cmd_awkward(args) -> int:
    report = verify.run_awkward(args.k, args.variant)
    _emit(_render([report], args.format), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    results = []
    for num, *_ in acceptance.CRITERIA:
        res = acceptance.run_criterion(num)
        print(res.line, flush=True)
        results.append(res)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    if args.out:
        payload = {"criteria": [r.as_dict() for r in results], "passed": passed, "total": len(results)}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK if passed == len(results) else EXIT_ASSERT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bridgelab",
        description="Exact enumeration checks for connectivity of bridge-addable graph classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, caps=CAPS):
        p = sub.add_parser(name, help=help_text, description=f"{help_text} ({caps})")
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "write one JSON line per unlabelled member")
    p.add_argument("--class", dest="cls", type=_class, required=True, help=CLASS_HELP)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true", help="only connected members")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)

    p = add("count", cmd_count, "CSV count table for n = 1..nmax")
    p.add_argument("--class", dest="cls", type=_class, required=True, help=CLASS_HELP)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)

    p = add("codec", cmd_codec, "rooted-encoding counts and roundtrip per n = 1..n")
    p.add_argument("--class", dest="cls", type=_class, required=True, help=CLASS_HELP)
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="encode one graph given in text format (n, then 'u v' lines)")
    p.add_argument("--roundtrip", action="store_true", help="encode/decode every member")
    p.add_argument("--emit", help="write (code, rooted code, b) JSON lines for size n")

    seq_caps = f"caps: nmax <= {series.TREE_CAP} for tree/unlabelled sequences, <= {series.LABELLED_CAP} for labelled"
    p = add("seq", cmd_seq, "exact counting sequences", seq_caps)
    p.add_argument("--name", required=True, help=", ".join(series.SEQUENCES))
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=["text", "bfile"], default="text")
    p.add_argument("--out")

    p = add("tau", cmd_tau, "unlabelled trees / unlabelled forests", f"cap: n <= {series.TREE_CAP}")
    p.add_argument("--n", type=int, required=True)

    p = add("renyi", cmd_renyi, "labelled trees / labelled forests", f"cap: 2 <= n <= {series.LABELLED_CAP}")
    p.add_argument("--n", type=int, required=True)

    p = add("frag", cmd_frag, "exact E[frag] per n", CAPS + f"; labelled forests up to n <= {series.FRAG_CAP}")
    p.add_argument("--class", dest="cls", type=_class, required=True, help=CLASS_HELP)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--model", choices=["labelled", "unlabelled"], default="unlabelled")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")

    p = add("verify", cmd_verify, "all per-class checks and evidence tables")
    p.add_argument("--class", dest="cls", type=_class, required=True, help=CLASS_HELP)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")

    p = add("awkward", cmd_awkward, "bridged-cycle example at n = 2k", "cap: 2k <= 10")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=["at_least", "exactly"], required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")

    p = add("report", cmd_report, "run every acceptance criterion", "fixed sizes, desk scale")
    p.add_argument("--out", help="write the combined JSON report here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except (UsageError, CapabilityError, InvalidArgument, OSError) as exc:
        print(f"bridgelab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
