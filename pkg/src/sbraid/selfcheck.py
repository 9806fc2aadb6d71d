"""
Exhaustive small-instance checks of the theory, runnable from the CLI.

Each check returns ``(ok, detail)``.  Sizes are kept small enough that the
whole suite finishes in a few seconds.
"""

from __future__ import annotations

import itertools
import time
from typing import Callable

from . import bkl
from .garside import delta, delta_codes, equal, normal_form
from .rewrite import Rewriter, relation_pairs
from .words import Word, reflect_codes


def positive_words(n: int, max_len: int):
    letters = range(1, 2 * n - 1)
    for L in range(max_len + 1):
        yield from itertools.product(letters, repeat=L)


def check_relations() -> tuple[bool, str]:
    count = 0
    for n in (3, 4):
        for lhs, rhs in relation_pairs(n):
            count += 1
            if not equal(Word.from_codes(n, lhs), Word.from_codes(n, rhs)):
                return False, f"n={n}: {lhs} != {rhs}"
    return True, f"{count} relation instances"


def check_delta_commutation() -> tuple[bool, str]:
    for n in range(2, 7):
        eng = Rewriter(n)
        d = delta_codes(n)
        for c in range(1, 2 * n - 1):
            if not eng.equal((c,) + d, d + reflect_codes(n, (c,))):
                return False, f"n={n}, letter code {c}"
    return True, "n = 2..6, every generator"


def check_division_routes(n: int = 3, max_len: int = 5) -> tuple[bool, str]:
    fast, slow = Rewriter(n), Rewriter(n, exhaustive=True)
    count = 0
    for w in positive_words(n, max_len):
        for c in range(1, 2 * n - 1):
            q, r = fast.divide(w, c), slow.divide(w, c)
            count += 1
            if (q is None) != (r is None) or (q is not None and r not in slow.klass(q)):
                return False, f"w={w}, c={c}: {q} vs {r}"
    return True, f"{count} (word, letter) pairs"


def check_impossible_case(n: int = 3, max_len: int = 4) -> tuple[bool, str]:
    eng = Rewriter(n, exhaustive=True)
    x1, x2 = n, n + 1
    for a in positive_words(n, max_len):
        if any(m[0] == x2 for m in eng.klass((x1,) + a)):
            return False, f"x1 {a} is divisible by x2"
    return True, f"n={n}, |A| <= {max_len}"


def check_embedding(n: int = 3, max_len: int = 4) -> tuple[bool, str]:
    eng = Rewriter(n, exhaustive=True)
    words = list(positive_words(n, max_len))
    groups: dict = {}
    for w in words:
        nf = normal_form(Word.from_codes(n, w))
        groups.setdefault((nf.power, nf.base.codes()), set()).add(w)
    for members in groups.values():
        w = next(iter(members))
        if members != set(eng.klass(w)):
            return False, f"class of {w} differs from its normal-form group"
    return True, f"{len(words)} words, {len(groups)} classes"


def check_delta_divisibility(n: int = 3, max_len: int = 5) -> tuple[bool, str]:
    eng = Rewriter(n, exhaustive=True)
    d = delta_codes(n)
    for w in positive_words(n, max_len):
        cls = eng.klass(w)
        by_delta = any(m[:len(d)] in eng.klass(d) for m in cls if len(m) >= len(d))
        by_all = all(any(m[0] == i for m in cls if m) for i in range(1, n))
        if by_delta != by_all:
            return False, f"w={w}"
    return True, f"n={n}, |w| <= {max_len}"


def check_presentation() -> tuple[bool, str]:
    for n in (3, 4):
        report = bkl.verify_presentation(n)
        if not report.ok:
            bad = [f.name for f in report.families if not f.ok]
            return False, f"n={n}: {bad}"
    return True, "n = 3, 4"


def check_delta_band_laws() -> tuple[bool, str]:
    for n in range(2, 6):
        d = bkl.delta_band(n)
        for t in range(2, n + 1):
            for s in range(1, t):
                if not bkl.band_equal(bkl.delta_left_factor(t, s, n), d):
                    return False, f"left factor t={t} s={s} n={n}"
                for kind in bkl.BandKind:
                    l = bkl.BandLetter(kind, t, s)
                    moved = bkl.band_delta_commute(l, n)
                    if not bkl.band_equal(bkl.BandWord(n, (l,)) * d, d * bkl.BandWord(n, (moved,))):
                        return False, f"commutation {l} n={n}"
    return True, "n = 2..5"


def check_center() -> tuple[bool, str]:
    for n in (3, 4):
        d2 = delta(n) ** 2
        for c in range(1, 2 * n - 1):
            g = Word.from_codes(n, (c,))
            if not equal(d2 * g, g * d2):
                return False, f"Delta^2 does not commute with {g}"
    d = delta(3)
    s1 = Word.from_codes(3, (1,))
    if equal(d * s1, s1 * d):
        return False, "Delta commutes with s1 for n=3"
    return True, "Delta^2 central, Delta not, n = 3, 4"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("defining relations hold", check_relations),
    ("Delta commutation", check_delta_commutation),
    ("division routes agree", check_division_routes),
    ("x1 A = x2 B impossible", check_impossible_case),
    ("embedding of the positive monoid", check_embedding),
    ("Delta divisibility criterion", check_delta_divisibility),
    ("center", check_center),
    ("band presentation", check_presentation),
    ("delta laws", check_delta_band_laws),
]


def run_all():
    """Yield ``(name, ok, detail, seconds)`` for every check."""
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crash of the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, ok, detail, time.perf_counter() - t0
