"""Command-line front end.

Exit codes: 0 ok, 1 evaluation error, 2 parse error, 3 verification mismatch.
"""

import argparse
import sys
import time

from . import bipartite, expr, verification
from .powersum import format_poly
from .series import SeriesError

EXIT_OK, EXIT_EVAL, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3
DEFAULT_DEGREE = 10
DEFAULT_CAP = 40


class _Fail(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _series(args):
    if args.n < 0:
        raise _Fail("-n must be nonnegative", EXIT_EVAL)
    if args.n > args.cap:
        raise _Fail(f"-n {args.n} exceeds the degree cap {args.cap} (raise it with --cap)",
                    EXIT_EVAL)
    try:
        tree = expr.parse(args.expr)
    except expr.ParseError as e:
        raise _Fail(f"parse error: {e}", EXIT_PARSE)
    return expr.evaluate(tree, max_degree=args.n)


def cmd_egf(args, out):
    f = _series(args)
    for n in range(args.n + 1):
        print(f.egf_coefficient(n), file=out)


def cmd_tgf(args, out):
    f = _series(args)
    for n in range(args.n + 1):
        print(f.tgf_coefficient(n), file=out)


def cmd_cis(args, out):
    f = _series(args)
    for n in range(args.n + 1):
        print(f"{n}: {format_poly(f.component(n))}", file=out)


def cmd_labeled(args, out):
    f = _series(args)
    for n in range(args.n + 1):
        print(f.labeled_count(n), file=out)


def cmd_unlabeled(args, out):
    f = _series(args)
    for n in range(args.n + 1):
        print(f.unlabeled_count(n), file=out)


def cmd_table(args, out):
    if args.max_n < 0 or args.max_n > args.cap:
        raise _Fail(f"--max-n must be in 0..{args.cap}", EXIT_EVAL)
    pipe = bipartite.default_pipeline()
    series = {"pbp": pipe.pbp, "cpbp": pipe.cpbp}[args.which]()
    rows = bipartite.table_rows(series, args.max_n)
    out.write(bipartite.format_table(rows, args.format))


def cmd_verify(args, out):
    t0 = time.time()
    problems = verification.verify(args.max_n)
    for p in problems:
        print(p, file=sys.stderr)
    elapsed = time.time() - t0
    if problems:
        print(f"verify: {len(problems)} mismatches ({elapsed:.1f}s)", file=out)
        raise _Fail("verification failed", EXIT_MISMATCH)
    print(f"verify: all oracle suites agree up to n={args.max_n} ({elapsed:.1f}s)",
          file=out)


def build_parser():
    p = argparse.ArgumentParser(
        prog="cycleindex",
        description="Exact cycle index series of combinatorial species.")
    sub = p.add_subparsers(dest="command", required=True)

    series_cmds = [
        ("egf", cmd_egf, "exponential generating coefficients x^0..x^N"),
        ("tgf", cmd_tgf, "type generating coefficients x^0..x^N"),
        ("cis", cmd_cis, "cycle index components of degree 0..N"),
        ("labeled", cmd_labeled, "labeled counts n = 0..N"),
        ("unlabeled", cmd_unlabeled, "unlabeled counts n = 0..N"),
    ]
    for name, fn, help_ in series_cmds:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr", help="species expression, e.g. \"E(E+)\"")
        sp.add_argument("-n", type=int, default=DEFAULT_DEGREE,
                        help=f"largest degree (default {DEFAULT_DEGREE})")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help=f"refuse degrees above this (default {DEFAULT_CAP})")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("table", help="labeled/unlabeled table for PBP or CPBP")
    sp.add_argument("which", choices=("pbp", "cpbp"))
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--format", choices=("text", "tsv"), default="text")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="compare the series against brute force")
    sp.add_argument("--max-n", type=int, default=5)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except _Fail as e:
        if e.code != EXIT_MISMATCH:
            print(f"cycleindex: {e}", file=sys.stderr)
        return e.code
    except expr.ParseError as e:
        print(f"cycleindex: parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (SeriesError, ValueError, RecursionError) as e:
        print(f"cycleindex: {e}", file=sys.stderr)
        return EXIT_EVAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
