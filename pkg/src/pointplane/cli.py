"""Command line front end.

Exit codes: 0 success or all checks pass, 1 some check failed, 2 usage or
input format error.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .axioms import check_all_axioms
from .clauses import DEFAULT_SIZE_LIMIT
from .errors import (AxiomsNotSatisfiedError, DegenerateInputError,
                     InconsistentStructureError, MalformedLineError,
                     ResourceLimitError, StructureFormatError)
from .independence import SearchConfig, search_independence
from .lines import all_lines
from .pg import DEFAULT_MAX_Q, generate_pg3
from .textio import parse_structure, serialize_structure
from .theorems import check_all_theorems, check_vy_axioms


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="ascii", newline="") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _cmd_generate(args):
    s = generate_pg3(args.q, max_q=args.max_q)
    _write(args.out, serialize_structure(s))
    return 0


def _cmd_check(args):
    s = parse_structure(_read(args.input))
    kw = dict(limit=args.limit, sample=args.sample, seed=args.seed)
    reports = []
    notes = []
    if args.what in ("axioms", "all"):
        suite = check_all_axioms(s, **kw)
        reports += suite.reports
        notes += suite.notes
    try:
        if args.what in ("theorems", "all"):
            reports += check_all_theorems(s, force=args.force, **kw)
        if args.what in ("vy", "all"):
            reports += check_vy_axioms(s, force=args.force, **kw)
    except AxiomsNotSatisfiedError as exc:
        if args.what != "all":
            reports += [r for r in exc.reports if not r.passed]
        print(f"pointplane: {exc} (use --force to check anyway)", file=sys.stderr)
        for r in reports:
            print(r.line())
        return 1
    for r in reports:
        print(r.line())
    for n in notes:
        print(f"# note {n}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_lines(args):
    s = parse_structure(_read(args.input))
    lines = all_lines(s)
    print(f"points {s.n_points}")
    print(f"planes {s.n_planes}")
    print(f"lines {len(lines)}")
    if not args.counts_only:
        for line in lines:
            pts = ",".join(map(str, line.points()))
            pls = ",".join(map(str, line.planes()))
            print(f"line points={pts} planes={pls}")
    return 0


def _cmd_dual(args):
    s = parse_structure(_read(args.input))
    _write(args.out, serialize_structure(s.dual))
    return 0


def _cmd_search(args):
    cfg = SearchConfig(args.drop, args.max_points, args.max_planes, args.budget, args.seed)
    report = search_independence(cfg)
    sys.stdout.write(report.to_text())
    if report.found is not None:
        doc = serialize_structure(report.found)
        if args.out:
            _write(args.out, doc)
        else:
            sys.stdout.write(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointplane",
        description="Check point/plane incidence structures against the "
                    "self-dual axioms for projective 3-space.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a model structure")
    gen.add_argument("family", choices=["pg3"])
    gen.add_argument("--q", type=int, required=True, help="prime field order")
    gen.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_generate)

    chk = sub.add_parser("check", help="run axiom and theorem checks")
    chk.add_argument("what", choices=["axioms", "theorems", "vy", "all"])
    chk.add_argument("--in", dest="input")
    chk.add_argument("--force", action="store_true",
                     help="check theorems even if the axioms fail")
    chk.add_argument("--sample", type=int, help="check N random instances per item")
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--limit", type=int, default=DEFAULT_SIZE_LIMIT,
                     help="largest sort size checked exhaustively")
    chk.set_defaults(func=_cmd_check)

    lns = sub.add_parser("lines", help="list the derived lines")
    lns.add_argument("--in", dest="input")
    lns.add_argument("--counts-only", action="store_true")
    lns.set_defaults(func=_cmd_lines)

    dual = sub.add_parser("dual", help="interchange points and planes")
    dual.add_argument("--in", dest="input")
    dual.add_argument("--out")
    dual.set_defaults(func=_cmd_dual)

    srch = sub.add_parser("search", help="look for axiom independence witnesses")
    srch.add_argument("--drop", type=int, required=True, choices=[1, 2, 3, 4])
    srch.add_argument("--max-points", type=int, required=True)
    srch.add_argument("--max-planes", type=int, required=True)
    srch.add_argument("--budget", type=int, default=100_000)
    srch.add_argument("--seed", type=int, default=0)
    srch.add_argument("--out")
    srch.set_defaults(func=_cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructureFormatError, ResourceLimitError, DegenerateInputError,
            ValueError) as exc:
        print(f"pointplane: {exc}", file=sys.stderr)
        return 2
    except (MalformedLineError, InconsistentStructureError) as exc:
        print(f"pointplane: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pointplane: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
