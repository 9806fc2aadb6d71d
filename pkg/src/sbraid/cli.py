"""
Command line front end.

    sbraid nf -n 3 "s1-"
    sbraid eq -n 3 "x1 s2 s1" "s2 s1 x2"
    sbraid verify -n 4 --json

Exit codes: 0 success / relation holds, 1 relation does not hold,
2 bad input, 3 resource cap hit, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bkl, conjugacy, garside, rewrite, sampling, selfcheck
from .errors import NotPositive, ParseError, ResourceLimit
from .words import parse

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _word(args, text):
    return parse(text, args.n)


def _nf_text(nf: garside.NormalForm) -> str:
    base = str(nf.base) or "1"
    if nf.side == "right":
        return f"{base} . D^{nf.power}"
    return f"D^{nf.power} . {base}"


def cmd_nf(args, out):
    nf = garside.normal_form(_word(args, args.word), side=args.side)
    out.write((_dump(nf.to_json()) if args.json else _nf_text(nf)) + "\n")
    return EXIT_OK


def cmd_greedy(args, out):
    g = garside.greedy_form(_word(args, args.word), side=args.side)
    if args.json:
        out.write(_dump(g.to_json()) + "\n")
        return EXIT_OK
    parts = []
    for b in g.blocks:
        frags = " | ".join(str(f) for f in b.fragments)
        xs = " ".join(f"x{i}" for i in b.xs)
        parts.append(f"[{frags}] {xs}".strip() if args.side == "left" else f"{xs} [{frags}]".strip())
    body = "  ".join(parts)
    line = f"D^{g.power}  {body}" if args.side == "left" else f"{body}  D^{g.power}"
    out.write(line.strip() + "\n")
    return EXIT_OK


def _verdict(args, out, holds, yes, no):
    word = yes if holds else no
    out.write((_dump({"n": args.n, "result": word}) if args.json else word) + "\n")
    return EXIT_OK if holds else EXIT_NO


def cmd_eq(args, out):
    holds = garside.equal(_word(args, args.u), _word(args, args.v))
    return _verdict(args, out, holds, "equal", "not-equal")


def cmd_conj(args, out):
    holds = conjugacy.conjugate_p(_word(args, args.u), _word(args, args.v))
    return _verdict(args, out, holds, "conjugate", "not-conjugate")


def cmd_summit(args, out):
    ss = conjugacy.summit_set(_word(args, args.word))
    if args.json:
        out.write(_dump(ss.to_json()) + "\n")
    else:
        out.write(f"summit power {ss.summit_power}, {len(ss.members)} members\n")
        for m in ss.sorted_members():
            out.write(f"  {_nf_text(m)}\n")
    return EXIT_OK


def cmd_convert(args, out):
    if args.to == "band":
        result = bkl.format_band(bkl.band_of_artin(_word(args, args.word)))
    else:
        result = str(bkl.artin_of(bkl.parse_band(args.word, args.n)))
    out.write((_dump({"n": args.n, "word": result}) if args.json else result) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    report = bkl.verify_presentation(args.n)
    if args.json:
        out.write(_dump(report.to_json()) + "\n")
    else:
        for f in report.families:
            status = "PASS" if f.ok else "FAIL"
            out.write(f"{status}  {f.name}  ({f.instances} instances)\n")
            for bad in f.failures:
                out.write(f"      {bad}\n")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_rand(args, out):
    rng = random.Random(args.seed)
    words = [str(sampling.random_word(args.n, args.length, rng, args.profile))
             for _ in range(args.count)]
    if args.json:
        out.write(_dump({"n": args.n, "seed": args.seed, "words": words}) + "\n")
    else:
        out.write("".join(w + "\n" for w in words))
    return EXIT_OK


def cmd_selfcheck(args, out):
    results = list(selfcheck.run_all())
    if args.json:
        out.write(_dump([{"check": name, "ok": ok, "detail": detail}
                         for name, ok, detail, _ in results]) + "\n")
    else:
        for name, ok, detail, secs in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {detail} [{secs:.2f}s]\n")
    return EXIT_OK if all(r[1] for r in results) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="strand count (required except for selfcheck)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=rewrite.DEFAULT_CAP,
                        help="maximum equivalence-class size")
    common.add_argument("--exhaustive", action="store_true",
                        help="decide divisibility by enumerating equivalence classes")

    p = _Parser(prog="sbraid", description="Singular braid monoid toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, *words, side=False):
        sp = sub.add_parser(name, parents=[common], help=help)
        for w in words:
            sp.add_argument(w)
        if side:
            sp.add_argument("--side", choices=["left", "right"], default="left")
        sp.set_defaults(func=fn)
        return sp

    add("nf", cmd_nf, "Garside normal form", "word", side=True)
    add("greedy", cmd_greedy, "left or right greedy form", "word", side=True)
    add("eq", cmd_eq, "decide equality of two words", "u", "v")
    add("conj", cmd_conj, "decide conjugacy of two words", "u", "v")
    add("summit", cmd_summit, "summit set of a word", "word")
    sp = add("convert", cmd_convert, "convert between Artin and band words", "word")
    sp.add_argument("--to", choices=["band", "artin"], required=True)
    add("verify", cmd_verify, "check the band presentation relations")
    sp = add("rand", cmd_rand, "random words")
    sp.add_argument("--length", type=int, default=8)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--profile", choices=sorted(sampling.PROFILES), default="mixed")
    sp.add_argument("--seed", type=int, default=0)
    add("selfcheck", cmd_selfcheck, "run the exhaustive small-n checks")
    return p


def _fail(code, kind, message):
    sys.stderr.write(_dump({"error": kind, "message": message}) + "\n")
    return code


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if args.n is None and args.command != "selfcheck":
            raise UsageError("-n is required")
        if args.n is not None and args.n < 2:
            raise UsageError(f"-n must be at least 2, got {args.n}")
        rewrite.configure(cap=args.cap, exhaustive=args.exhaustive)
        return args.func(args, out)
    except UsageError as exc:
        return _fail(EXIT_INPUT, "usage", str(exc))
    except (ParseError, NotPositive, ValueError) as exc:
        return _fail(EXIT_INPUT, type(exc).__name__, str(exc))
    except ResourceLimit as exc:
        return _fail(EXIT_CAP, type(exc).__name__, str(exc))
    except AssertionError as exc:
        return _fail(EXIT_INTERNAL, "InvariantViolation", str(exc))
    finally:
        rewrite.configure()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
