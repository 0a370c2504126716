"""Command line front end.

    autfr-homology poincare --group A2 -r 1
    autfr-homology act --group A2 -r 3 --word "R(1,3)" --class "t1_1 t1_3 t2_1 t2_2"
    autfr-homology matrix --group A1 -r 2 --word "R(1,2)" --degree 3
    autfr-homology verify --suite ia --group A2 -r 3
    autfr-homology groups list

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 semantic error.
The default output format can be set with AUTFR_HOMOLOGY_FORMAT=json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .action import act_path_a, act_path_b, full_matrix, representation_matrix
from .catalog import catalog_entries, degrees_of, dimension_of, format_polynomial, parse_group, poincare_polynomial
from .errors import ParseError
from .freegroup import AutMap, parse_letters
from .grassmann import Context, HomologyClass
from .verify import SUITES, verify_theorems

FORMAT_ENV = "AUTFR_HOMOLOGY_FORMAT"
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _context(args) -> Context:
    return Context(degrees_of(parse_group(args.group)), args.r)


def _source(args):
    if args.tuple is not None:
        text = args.tuple
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        f = AutMap.from_json(text)
        if f.r != args.r:
            raise ValueError(f"automorphism is on F_{f.r} but -r is {args.r}")
        return f
    letters = parse_letters(args.word or "")
    for l in letters:
        l.check(args.r)
    return letters


def _emit(args, text: str, data: dict):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_poincare(args) -> int:
    spec = parse_group(args.group)
    coeffs = poincare_polynomial(spec, args.r)
    poly = format_polynomial(coeffs)
    _emit(args, f"{poly}\ncoefficients: {coeffs}",
          {"schema": 1, "group": str(spec), "r": args.r, "coefficients": coeffs, "polynomial": poly})
    return EXIT_OK


def cmd_act(args) -> int:
    ctx = _context(args)
    x = HomologyClass.parse(ctx, args.class_)
    src = _source(args)
    y = act_path_b(src, x) if isinstance(src, AutMap) else act_path_a(src, x)
    _emit(args, str(y), {"schema": 1, "context": {"degrees": list(ctx.degrees), "r": ctx.r},
                         "input": str(x), "output": str(y)})
    return EXIT_OK


def cmd_matrix(args) -> int:
    ctx = _context(args)
    src = _source(args)
    if args.full:
        m = full_matrix(src, ctx)
    else:
        if args.degree is None:
            raise ValueError("give --degree d or --full")
        m = representation_matrix(src, args.degree, ctx)
    label = "full" if m.degree is None else f"degree {m.degree}"
    text = "\n".join([
        f"{label}, dimension {m.size}",
        "basis: " + ", ".join(ctx.monomial_str(b) for b in m.basis),
        json.dumps(m.rows()),
    ])
    _emit(args, text, m.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.groups:
        ctxs = [Context(degrees_of(parse_group(g)), args.r) for g in args.groups.split(",")]
        ctx, others = ctxs[0], ctxs[1:]
    else:
        ctx, others = _context(args), None
    report = verify_theorems(ctx, trials=args.trials, max_length=args.max_length,
                             seed=args.seed, suites=suites, compare_with=others)
    status = "ALL PASS" if report.passed else "FAILED"
    _emit(args, "\n".join(report.lines() + [status]), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_groups(args) -> int:
    rows = [{"name": f.name, "degrees": list(f.degrees()), "dimension": dimension_of(f)}
            for f in catalog_entries(args.max_rank)]
    text = "\n".join(f"{r['name']:<4} dim {r['dimension']:<4} degrees {r['degrees']}" for r in rows)
    _emit(args, text, {"schema": 1, "groups": rows})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("--group", "-g", default="A1", help="e.g. A2, B3xG2, deg[3,5,7]")
    grp.add_argument("-r", type=int, default=1, help="rank of the free group")

    src = argparse.ArgumentParser(add_help=False)
    ex = src.add_mutually_exclusive_group()
    ex.add_argument("--word", "-w", help='letter word, e.g. "L(2,1) Ri(2,1)"')
    ex.add_argument("--tuple", "-t", help="automorphism JSON, inline or a file path")

    p = _Parser(prog="autfr-homology", description="Aut(F_r) acting on H_*(G^r; Q)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("poincare", parents=[common, grp], help="Poincare polynomial of G^r")
    q.set_defaults(func=cmd_poincare)

    q = sub.add_parser("act", parents=[common, grp, src], help="act on a homology class")
    q.add_argument("--class", "-c", dest="class_", required=True)
    q.set_defaults(func=cmd_act)

    q = sub.add_parser("matrix", parents=[common, grp, src], help="representation matrix")
    q.add_argument("--degree", "-d", type=int)
    q.add_argument("--full", action="store_true")
    q.set_defaults(func=cmd_matrix)

    q = sub.add_parser("verify", parents=[common, grp], help="run verification suites")
    q.add_argument("--suite", choices=SUITES + ("all",), default="all")
    q.add_argument("--groups", help="comma separated groups of equal rank, e.g. A3,B3")
    q.add_argument("--trials", type=int, default=50)
    q.add_argument("--max-length", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("groups", parents=[common], help="catalog queries")
    q.add_argument("action", choices=("list",))
    q.add_argument("--max-rank", type=int, default=4)
    q.set_defaults(func=cmd_groups)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
