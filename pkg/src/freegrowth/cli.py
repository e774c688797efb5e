"""Command-line interface.

Exit codes: 0 success / all instances pass, 1 a lemma or bound failed
(the counterexample is printed), 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .bounds import (
    lemma2_dichotomy,
    lemma3_witness,
    lemma4_bound,
    lemma6_check,
    theorem_check,
)
from .errors import FreeGrowthError, PreconditionViolation, SizeCapExceeded, VerificationFailure
from .extraction import lemma1_extract
from .generators import extremal_family
from .periodicity import period as word_period
from .setops import DEFAULT_CAP, growth_table, power, product
from .textio import format_word_set, read_word_set, write_word_set
from .words import parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_set(S, out: str | None) -> None:
    if out:
        write_word_set(out, S)
        print(f"wrote {len(S)} words to {out}", file=sys.stderr)
    else:
        sys.stdout.write(format_word_set(S))


def cmd_reduce(args) -> int:
    print(parse_word(args.word, args.rank))
    return EXIT_OK


def cmd_period(args) -> int:
    dec = word_period(parse_word(args.word, args.rank), args.side)
    if dec is None:
        print("aperiodic")
    else:
        print(f"period={dec.period} exponent={dec.exponent} tail={dec.tail}")
    return EXIT_OK


def cmd_product(args) -> int:
    A, B = read_word_set(args.A, args.rank), read_word_set(args.B, args.rank)
    _emit_set(product(A, B, args.max_size), args.output)
    return EXIT_OK


def cmd_power(args) -> int:
    A = read_word_set(args.A, args.rank)
    try:
        S = power(A, args.n, args.max_size)
    except SizeCapExceeded as exc:
        print(f"error: {exc} (computed up to A^{exc.reached})", file=sys.stderr)
        return EXIT_USAGE
    _emit_set(S, args.output)
    return EXIT_OK


def cmd_growth(args) -> int:
    A = read_word_set(args.A, args.rank)
    report = growth_table(A, args.nmax, args.max_size)
    text = report.to_csv()
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if report.truncated:
        print(f"warning: truncated after n={len(report.rows)} (size cap)", file=sys.stderr)
    return EXIT_OK


def cmd_lemma1(args) -> int:
    A = read_word_set(args.A, args.rank)
    r = lemma1_extract(A)
    print(f"u={r.u}")
    print("A0=" + ",".join(str(w) for w in r.A0))
    print("B0=" + ",".join(str(w) for w in r.B0))
    if args.trace:
        Path(args.trace).write_text(r.dumps() + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_extremal(args) -> int:
    A = extremal_family(args.k, args.rank)
    sys.stdout.write(format_word_set(A))
    if args.n:
        print("n,size,k_power,ratio")
        for row in growth_table(A, args.n, args.max_size).rows:
            kp = args.k ** ((row.n + 1) // 2)
            print(f"{row.n},{row.size},{kp},{row.size / kp:.6g}")
    return EXIT_OK


# -- check -----------------------------------------------------------------

def _check_files(args) -> checks.CheckResult:
    lemma = args.lemma
    files = args.files
    rank = args.rank
    res = checks.CheckResult(f"{lemma}-files")
    res.instances = 1
    if lemma == "theorem":
        if len(files) != 1:
            raise UsageError("theorem takes one file: A.txt")
        rep = theorem_check(read_word_set(files[0], rank), args.n, args.max_size)
        print(
            f"n={rep.n} |A|={rep.base_size} |A^n|={rep.size} exponent={rep.floor_exponent} "
            f"ratio={rep.ratio} branch={rep.branch} c={rep.derived_constant} bound_ok={rep.bound_ok}"
        )
        if not rep.bound_ok:
            res.fail(n=rep.n, size=rep.size)
        return res
    if len(files) != 3:
        raise UsageError(f"{lemma} takes three files: U.txt V.txt W.txt")
    U, V, W = (read_word_set(f, rank) for f in files)
    if lemma == "lemma2":
        d = lemma2_dichotomy(U, V, W, args.side)
        print(
            f"|UVW|={d.size} threshold={d.threshold} bound_holds={d.bound_holds} "
            f"common_period={d.period if d.period is not None else '-'} side={d.side}"
        )
        return res
    res.instances = 0
    for v in V:
        res.instances += 1
        if lemma == "lemma3":
            found = lemma3_witness(U, v, W)
            print(f"v={v} " + ("no triple representation" if found is None else f"period={found[0]} witness={found[1]}"))
        elif lemma == "lemma4":
            ok = lemma4_bound(U, v, W)
            print(f"v={v} bound_ok={ok}")
            if not ok:
                res.fail(v=str(v))
        elif lemma == "lemma6":
            ok = lemma6_check(U, v, W, args.q)
            print(f"v={v} q={args.q} bound_ok={ok}")
            if not ok:
                res.fail(v=str(v))
        else:
            raise UsageError(f"{lemma} does not accept --files")
    return res


def _check_generated(args) -> list[checks.CheckResult]:
    lemma = args.lemma
    exhaustive = args.exhaustive or not args.random
    families = checks.EXHAUSTIVE_FAMILIES
    if args.maxlen is not None or args.maxsize is not None:
        families = ((args.maxlen or 3, args.maxsize or 2),)
    out = []
    if lemma == "lemma0":
        if args.random:
            raise UsageError("lemma0 is checked exhaustively only")
        out.append(checks.lemma0_exhaustive(args.maxlen or 12, args.rank))
    elif lemma == "lemma2":
        if exhaustive:
            out.append(checks.lemma2_exhaustive(families))
        if args.random:
            out.append(checks.lemma2_random(args.count, args.seed))
    elif lemma in ("lemma3", "lemma4"):
        if exhaustive:
            out.append(checks.multiplicity_exhaustive(families))
        if args.random:
            out.append(checks.multiplicity_random(args.count, args.seed))
    elif lemma == "lemma5":
        if args.random:
            raise UsageError("lemma5 is checked exhaustively only")
        out.append(checks.lemma5_exhaustive(args.maxlen or 4, args.host_length, args.rank))
    elif lemma == "lemma6":
        out.append(checks.lemma6_random(args.count, args.seed))
    elif lemma == "theorem":
        corpus = checks.lemma1_corpus(args.count, args.seed)
        out.append(checks.theorem_corpus(corpus, (args.n,)))
    return out


def cmd_check(args) -> int:
    if args.files:
        results = [_check_files(args)]
    else:
        results = _check_generated(args)
    status = EXIT_OK
    for r in results:
        print(r.summary())
        for f in r.failures[:5]:
            print("  counterexample: " + json.dumps(f, default=str))
        if not r.ok:
            status = EXIT_FAIL
    return status


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=argparse.SUPPRESS, help="free group rank (default 2)")
    common.add_argument("--max-size", type=int, default=argparse.SUPPRESS, help=f"element cap for product sets (default {DEFAULT_CAP})")

    parser = argparse.ArgumentParser(prog="freegrowth", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="freely reduce a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("period", parents=[common], help="left or right period of a word")
    p.add_argument("word")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("product", parents=[common], help="product set AB")
    p.add_argument("A")
    p.add_argument("B")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("power", parents=[common], help="power set A^n")
    p.add_argument("A")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("growth", parents=[common], help="table of |A^n|")
    p.add_argument("A")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("lemma1", parents=[common], help="extract A0, B0 from a conjugate of A")
    p.add_argument("A")
    p.add_argument("--trace")
    p.set_defaults(func=cmd_lemma1)

    p = sub.add_parser("extremal", parents=[common], help="the family {x, y, ..., y^k}")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("check", parents=[common], help="verify a lemma on generated or given instances")
    p.add_argument("lemma", choices=("lemma0", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "theorem"))
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--maxlen", type=int)
    p.add_argument("--maxsize", type=int)
    p.add_argument("--host-length", type=int, default=14, help="lemma5 host word length")
    p.add_argument("--random", action="store_true")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--files", nargs="+", metavar="FILE")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("-q", type=int, default=1, help="lemma6 period multiplicity")
    p.add_argument("-n", type=int, default=3)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.rank = getattr(args, "rank", 2)
    args.max_size = getattr(args, "max_size", DEFAULT_CAP)
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        print("  counterexample: " + json.dumps(exc.instance, default=str))
        return EXIT_FAIL
    except (UsageError, PreconditionViolation, FreeGrowthError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
