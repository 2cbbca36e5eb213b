"""Command-line front end.

Exit codes: 0 success, 1 consistency failures (``check``), 2 domain error,
3 usage error, 4 rank-table error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, criteria, fcs, ranks
from .criteria import DomainError, FinitenessVerdict

EXIT_OK, EXIT_INCONSISTENT, EXIT_DOMAIN, EXIT_USAGE, EXIT_TABLE = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text: str) -> tuple[int, int]:
    """``"3"`` -> (3, 3), ``"1..4"`` -> (1, 4)."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _provider(args) -> ranks.RankProvider:
    if getattr(args, "table", None):
        return ranks.TableProvider.load(args.table)
    return ranks.DefaultProvider()


# -- rendering ---------------------------------------------------------------

def render_verdict(v: FinitenessVerdict, fmt: str, explain: bool) -> str:
    if fmt == "json":
        return json.dumps({
            "verdict": v.value.value,
            "condition": v.condition,
            "witness": list(v.witness) if v.witness else None,
        })
    if fmt == "text":
        return v.explain() if explain else str(v)
    raise UsageError(f"format {fmt!r} is not available for single verdicts")


def render_rank(r: ranks.RankInterval, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"lo": r.lo, "hi": int(r.hi) if r.bounded else "inf",
                           "unconstrained": r.unconstrained})
    if fmt == "text":
        return f"{r} (unconstrained)" if r.unconstrained else str(r)
    raise UsageError(f"format {fmt!r} is not available for ranks")


def render_window(points, fmt: str) -> str:
    pts = sorted(points)
    if fmt == "csv":
        return "\n".join(["x,y"] + [f"{p.x},{p.y}" for p in pts])
    if fmt == "json":
        return json.dumps([list(p) for p in pts])
    return " ".join(str(p) for p in pts)


def render_census(records, fmt: str) -> str:
    if fmt == "csv":
        return census.records_to_csv(records).rstrip("\n")
    if fmt == "json":
        return census.records_to_json(records)
    lines = [f"{'p':>3} {'q':>3} {'m':>3}  {'tori':<8} {'rank':<9} condition"]
    for r in records:
        cond = r.condition or ""
        if r.witness:
            cond += f" {r.witness}"
        lines.append(f"{r.p:>3} {r.q:>3} {r.m:>3}  {r.tori.value:<8} {str(r.rank):<9} {cond}")
    return "\n".join(lines)


def render_report(report: census.ConsistencyReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=1)
    if fmt != "text":
        raise UsageError(f"format {fmt!r} is not available for check")
    d = report.as_dict()
    lines = [f"checked {report.checked} triples"]
    for key in ("equivalence_failures", "chain_violations", "vacuity_failures", "symmetry_failures"):
        lines.append(f"{key}: {len(d[key])}")
        lines.extend(f"  {item}" for item in d[key])
    lines.append("consistent" if report.ok else "INCONSISTENT")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------

def cmd_knot(args):
    _need(args, "q", "m")
    return render_verdict(criteria.knot_infinite(args.q, args.m), args.format, args.explain)


def cmd_framed(args):
    _need(args, "p", "q", "m")
    return render_verdict(criteria.framed_knot_infinite(args.p, args.q, args.m), args.format, args.explain)


def cmd_link(args):
    _need(args, "p", "q", "m")
    fn = criteria.link_zero_infinite if args.zero else criteria.link_unknotted_infinite
    return render_verdict(fn(args.p, args.q, args.m), args.format, args.explain)


def cmd_tori(args):
    _need(args, "p", "q", "m")
    fn = criteria.knotted_tori_infinite_via_components if args.via_components else criteria.knotted_tori_infinite
    return render_verdict(fn(args.p, args.q, args.m), args.format, args.explain)


def cmd_fcs(args):
    _need(args, "i", "j")
    i, j = args.i, args.j
    if args.x is not None or args.y is not None:
        _need(args, "x", "y")
        clause = fcs.matching_clause(i, j, fcs.LatticePoint(args.x, args.y))
        if args.format == "json":
            return json.dumps({"member": clause is not None, "clause": clause.text if clause else None})
        if args.format != "text":
            raise UsageError("membership queries support text and json only")
        return f"member (clause: {clause.text})" if clause else "not a member"
    if args.xmax is not None or args.ymax is not None:
        _need(args, "xmax", "ymax")
        if args.xmax < 1 or args.ymax < 1:
            raise UsageError("--xmax and --ymax must be >= 1")
        return render_window(fcs.fcs_window(i, j, args.xmax, args.ymax), args.format)
    if args.a is not None or args.b is not None or args.c is not None:
        _need(args, "a", "b", "c")
        try:
            eq = fcs.LineEquation(args.a, args.b, args.c)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sols = fcs.line_solutions(eq)
        witness = fcs.fcs_line_witness(i, j, eq)
        if args.format == "json":
            return json.dumps({"solutions": [list(p) for p in sols],
                               "witness": list(witness) if witness else None})
        if args.format != "text":
            raise UsageError("line queries support text and json only")
        text = f"witness {witness}" if witness else "no witness"
        if args.explain:
            text += f"\nsolutions of {eq}: " + (" ".join(map(str, sols)) or "none")
        return text
    raise UsageError("fcs needs --x/--y, --xmax/--ymax or --a/--b/--c")


def cmd_rank(args):
    provider = _provider(args)
    if args.kind == "tori":
        _need(args, "p", "q", "m")
        r = ranks.tori_rank(args.p, args.q, args.m, provider)
    elif args.kind == "link":
        _need(args, "p", "q", "m")
        r = ranks.full_link_rank(args.p, args.q, args.m, provider)
    else:
        _need(args, "q", "n", "k")
        r = provider.stiefel_rank(args.q, args.n, args.k)
    return render_rank(r, args.format)


def _bounds(args) -> census.GridBounds:
    _need(args, "p", "q")
    try:
        return census.GridBounds(args.p, args.q, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_census(args):
    records = census.run_census(_bounds(args), _provider(args), workers=args.workers)
    return render_census(records, args.format)


def cmd_check(args):
    report = census.consistency_report(_bounds(args), _provider(args))
    return render_report(report, args.format), (EXIT_OK if report.ok else EXIT_INCONSISTENT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="knottori", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.add_argument("--explain", action="store_true")
        return p

    def dims(p, names, kind=int):
        for name in names:
            p.add_argument(f"--{name}", type=kind)

    dims(common(sub.add_parser("knot", help="knots S^q -> S^m")), "qm")
    dims(common(sub.add_parser("framed", help="framed knots D^p x S^q -> S^m")), "pqm")
    link = common(sub.add_parser("link", help="links S^p | S^q -> S^m, components unknotted"))
    dims(link, "pqm")
    link.add_argument("--zero", action="store_true", help="only the second component unknotted")
    tori = common(sub.add_parser("tori", help="knotted tori S^p x S^q -> S^m"))
    dims(tori, "pqm")
    tori.add_argument("--via-components", action="store_true")

    f = common(sub.add_parser("fcs", help="finiteness-checking sets"))
    dims(f, ["i", "j", "x", "y", "xmax", "ymax", "a", "b", "c"])

    rank = common(sub.add_parser("rank", help="rational rank bounds"))
    rank.add_argument("kind", choices=["tori", "stiefel", "link"])
    dims(rank, "pqmnk")
    rank.add_argument("--table")

    for name, helptext in (("census", "tabulate a dimension grid"), ("check", "run the consistency checks")):
        p = common(sub.add_parser(name, help=helptext))
        dims(p, "pqm", kind=int_range)
        p.add_argument("--table")
        if name == "census":
            p.add_argument("--workers", type=int, default=1)
    return parser


COMMANDS = {
    "knot": cmd_knot, "framed": cmd_framed, "link": cmd_link, "tori": cmd_tori,
    "fcs": cmd_fcs, "rank": cmd_rank, "census": cmd_census, "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    code = EXIT_OK
    try:
        out = COMMANDS[args.command](args)
        if isinstance(out, tuple):
            out, code = out
    except UsageError as exc:
        print(f"knottori: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"knottori: domain error: {exc.constraint} ({exc})", file=sys.stderr)
        return EXIT_DOMAIN
    except ranks.RankTableError as exc:
        print(f"knottori: rank table error: {exc}", file=sys.stderr)
        return EXIT_TABLE
    except ranks.RankConflict as exc:
        print(f"knottori: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
