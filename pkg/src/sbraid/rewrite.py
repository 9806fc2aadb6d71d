"""
Positive equivalence in SB_n^+ by exhaustive rewriting.

Every positive relation of the singular braid monoid replaces a factor by
another factor of the same length and with the same numbers of crossing and
singular letters.  The equivalence class of a positive word is therefore a
finite set of words of one length, and breadth-first search over single
relation applications enumerates it exactly.  Everything else in this
module (division, bases, maximal braid divisors) is built on that search
and on left/right cancellativity of the monoid.

The engine works on code tuples (see :mod:`sbraid.words`).  The Word-level
functions at the bottom are thin wrappers.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import CapExceeded
from .words import Degrees, Word, check_strands, degrees, require_positive

DEFAULT_CAP = 2_000_000
MEMO_LIMIT = 4_000_000

Codes = tuple[int, ...]


def relation_pairs(n: int) -> list[tuple[Codes, Codes]]:
    """
    The positive defining relations of SB_n as pairs of code tuples.

    Each unordered relation appears once; callers apply both directions.
    """
    check_strands(n)
    X = lambda i: n - 1 + i  # noqa: E731
    idx = range(1, n)
    rels: list[tuple[Codes, Codes]] = []
    for i in idx:
        for j in idx:
            if j - i > 1:
                rels.append(((i, j), (j, i)))
                rels.append(((X(i), X(j)), (X(j), X(i))))
            if abs(i - j) != 1:
                rels.append(((X(i), j), (j, X(i))))
    for i in range(1, n - 1):
        rels.append(((i, i + 1, i), (i + 1, i, i + 1)))
        rels.append(((i, i + 1, X(i)), (X(i + 1), i, i + 1)))
        rels.append(((i + 1, i, X(i + 1)), (X(i), i + 1, i)))
    return rels


class Rewriter:
    """
    Positive-equivalence engine for words on ``n`` strands.

    Classes are enumerated by breadth-first search and memoized: every
    member of an enumerated class maps to the same frozenset.  Division by a
    letter has two routes.  The default one follows the case analysis of
    left division in SB_n^+ (first letter ``a`` of ``w`` against the divisor
    ``c``) and never enumerates a class; with ``exhaustive=True`` it looks
    for a class member starting with ``c`` instead.  Both must agree, and
    the test suite checks that they do.
    """

    def __init__(self, n: int, cap: int = DEFAULT_CAP, exhaustive: bool = False):
        check_strands(n)
        self.n = n
        self.cap = cap
        self.exhaustive = exhaustive
        self._two: dict[Codes, list[Codes]] = defaultdict(list)
        self._three: dict[Codes, list[Codes]] = defaultdict(list)
        for lhs, rhs in relation_pairs(n):
            table = self._two if len(lhs) == 2 else self._three
            table[lhs].append(rhs)
            table[rhs].append(lhs)
        self._two = dict(self._two)
        self._three = dict(self._three)
        self._classes: dict[Codes, frozenset[Codes]] = {}
        self._quotients: dict[tuple[Codes, int], Optional[Codes]] = {}
        self._lock = threading.Lock()

    # -- search ------------------------------------------------------------

    def neighbors(self, w: Codes) -> Iterator[Codes]:
        two, three = self._two, self._three
        L = len(w)
        for p in range(L - 1):
            reps = two.get(w[p:p + 2])
            if reps:
                for rep in reps:
                    yield w[:p] + rep + w[p + 2:]
            if p + 2 < L:
                reps = three.get(w[p:p + 3])
                if reps:
                    for rep in reps:
                        yield w[:p] + rep + w[p + 3:]

    def _remember(self, members: frozenset[Codes]) -> None:
        with self._lock:
            if len(self._classes) + len(members) > MEMO_LIMIT:
                self._classes.clear()
                self._quotients.clear()
            for m in members:
                self._classes[m] = members

    def search(self, w: Codes, stop: Optional[Callable[[Codes], bool]] = None,
               cap: Optional[int] = None) -> tuple[Optional[Codes], Optional[frozenset[Codes]]]:
        """
        Breadth-first walk of the class of ``w``.

        Returns ``(hit, None)`` as soon as a member satisfies ``stop``, or
        ``(None, members)`` once the class is exhausted.
        """
        cap = self.cap if cap is None else cap
        known = self._classes.get(w)
        if known is not None:
            if stop is not None:
                hit = min((m for m in known if stop(m)), default=None)
                if hit is not None:
                    return hit, None
            return None, known
        if stop is not None and stop(w):
            return w, None
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for u in frontier:
                for v in self.neighbors(u):
                    if v in seen:
                        continue
                    if stop is not None and stop(v):
                        return v, None
                    seen.add(v)
                    nxt.append(v)
                if len(seen) > cap:
                    raise CapExceeded(
                        f"equivalence class exceeds {cap} members", frozenset(seen))
            frontier = nxt
        members = frozenset(seen)
        self._remember(members)
        return None, members

    def klass(self, w: Codes, cap: Optional[int] = None) -> frozenset[Codes]:
        return self.search(tuple(w), cap=cap)[1]

    def base(self, w: Codes) -> Codes:
        """Lexicographically least member of the class of ``w``."""
        w = tuple(w)
        if self.exhaustive or w in self._classes:
            return min(self.klass(w))
        # the least member starts with the least letter dividing w, and
        # continues with the base of the quotient
        out = []
        letters = range(1, 2 * self.n - 1)
        while w:
            for c in letters:
                q = self.divide(w, c)
                if q is not None:
                    out.append(c)
                    w = q
                    break
            else:
                raise AssertionError(f"nonempty word {w} has no left divisor letter")
        return tuple(out)

    # -- division ----------------------------------------------------------

    def divide(self, w: Codes, c: int) -> Optional[Codes]:
        """Quotient ``z`` with ``w = c z`` (single letter code ``c``), else None."""
        key = (w, c)
        try:
            return self._quotients[key]
        except KeyError:
            pass
        if not w:
            q = None
        elif self.exhaustive:
            hit, _ = self.search(w, lambda m: m[0] == c)
            q = None if hit is None else hit[1:]
        else:
            q = self._divide_cases(w, c)
        if len(self._quotients) > MEMO_LIMIT:
            self._quotients.clear()
        self._quotients[key] = q
        return q

    def _divide_cases(self, w: Codes, c: int) -> Optional[Codes]:
        a, rest = w[0], w[1:]
        if a == c:
            return rest
        n = self.n
        a_sigma, c_sigma = a < n, c < n
        i = a if a_sigma else a - n + 1
        k = c if c_sigma else c - n + 1
        if abs(i - k) != 1:
            # the two letters commute, so c must divide the rest
            q = self.divide(rest, c)
            return None if q is None else (a,) + q
        if a_sigma and c_sigma:
            # s_i A = s_k B forces A = s_k s_i Z; quotient s_i s_k Z
            q = self.left_divide(rest, (c, a))
            return None if q is None else (a, c) + q
        if a_sigma:
            # s_i A = x_k B forces A = s_k x_i Z; quotient s_i s_k Z
            q = self.left_divide(rest, (k, n - 1 + i))
            return None if q is None else (a, k) + q
        if c_sigma:
            # x_i A = s_k B forces A = s_k s_i Z; quotient s_i x_k Z
            q = self.left_divide(rest, (k, i))
            return None if q is None else (i, n - 1 + k) + q
        return None  # x_i A = x_k B with |i-k| = 1 never happens

    def divide_right(self, w: Codes, c: int) -> Optional[Codes]:
        q = self.divide(w[::-1], c)
        return None if q is None else q[::-1]

    def left_divide(self, w: Codes, d: Codes) -> Optional[Codes]:
        for c in d:
            w = self.divide(w, c)
            if w is None:
                return None
        return w

    def right_divide(self, w: Codes, d: Codes) -> Optional[Codes]:
        q = self.left_divide(w[::-1], d[::-1])
        return None if q is None else q[::-1]

    def equal(self, a: Codes, b: Codes) -> bool:
        """
        Positive equality.

        Peels the first letter of ``b`` off ``a`` by division; cancellativity
        makes this equivalent to testing ``b`` for membership in the class of
        ``a``, and a true answer never needs the full class.
        """
        a, b = tuple(a), tuple(b)
        if len(a) != len(b) or self.kinds(a) != self.kinds(b):
            return False
        while a != b:
            known = self._classes.get(a)
            if known is not None:
                return b in known
            a = self.divide(a, b[0])
            if a is None:
                return False
            b = b[1:]
        return True

    def kinds(self, w: Codes) -> tuple[int, int]:
        nx = sum(1 for c in w if c >= self.n)
        return len(w) - nx, nx

    # -- maximal divisors ---------------------------------------------------

    def max_braid_divisor(self, w: Codes) -> tuple[Codes, Codes]:
        s: list[int] = []
        rem = tuple(w)
        while True:
            for i in range(1, self.n):
                q = self.divide(rem, i)
                if q is not None:
                    s.append(i)
                    rem = q
                    break
            else:
                return tuple(s), self.base(rem)

    def x_divisors(self, w: Codes) -> list[int]:
        return [c - self.n + 1 for c in range(self.n, 2 * self.n - 1)
                if self.divide(w, c) is not None]


_engines: dict[tuple[int, int, bool], Rewriter] = {}
_settings = {"cap": DEFAULT_CAP, "exhaustive": False}


def configure(cap: int = DEFAULT_CAP, exhaustive: bool = False) -> None:
    """
    Set the class-size cap and the division route of the shared engines.

    ``exhaustive=True`` makes every division search the equivalence class,
    which is slow but independent of the case analysis.
    """
    _settings["cap"] = cap
    _settings["exhaustive"] = exhaustive


def rewriter(n: int) -> Rewriter:
    key = (n, _settings["cap"], _settings["exhaustive"])
    eng = _engines.get(key)
    if eng is None:
        eng = _engines[key] = Rewriter(n, *key[1:])
    return eng


def clear_caches() -> None:
    _engines.clear()


# -- Word-level API ----------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceClass:
    n: int
    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, w: Word) -> bool:
        return w.n == self.n and w.codes() in self.members

    def words(self) -> list[Word]:
        return [Word.from_codes(self.n, m) for m in sorted(self.members)]


@dataclass(frozen=True)
class MaxDivisorSplit:
    s_part: Word
    t_part: Word


def _codes(w: Word) -> Codes:
    require_positive(w)
    return w.codes()


def _same_n(a: Word, b: Word) -> None:
    if a.n != b.n:
        raise ValueError(f"words on different strand counts ({a.n} vs {b.n})")


def neighbors(w: Word) -> set[Word]:
    eng = rewriter(w.n)
    return {Word.from_codes(w.n, v) for v in eng.neighbors(_codes(w))}


def enumerate_class(w: Word, cap: Optional[int] = None) -> EquivalenceClass:
    return EquivalenceClass(w.n, rewriter(w.n).klass(_codes(w), cap=cap))


def positively_equal(a: Word, b: Word) -> bool:
    _same_n(a, b)
    ca, cb = _codes(a), _codes(b)
    if degrees(a) != degrees(b):
        return False
    return rewriter(a.n).equal(ca, cb)


def base(w: Word) -> Word:
    return Word.from_codes(w.n, rewriter(w.n).base(_codes(w)))


def left_divide(w: Word, d: Word) -> Optional[Word]:
    _same_n(w, d)
    q = rewriter(w.n).left_divide(_codes(w), _codes(d))
    return None if q is None else Word.from_codes(w.n, q)


def right_divide(w: Word, d: Word) -> Optional[Word]:
    _same_n(w, d)
    q = rewriter(w.n).right_divide(_codes(w), _codes(d))
    return None if q is None else Word.from_codes(w.n, q)


def max_braid_divisor(w: Word, side: str = "left") -> MaxDivisorSplit:
    """
    Split ``w = S T`` with ``S`` a braid word of maximal length.

    Crossing letters are peeled greedily, smallest index first; any choice
    gives a maximal divisor, the fixed order makes the output reproducible.
    With ``side="right"`` the split is ``w = T S``.
    """
    eng = rewriter(w.n)
    c = _codes(w)
    if side == "left":
        s, t = eng.max_braid_divisor(c)
    elif side == "right":
        s, t = eng.max_braid_divisor(c[::-1])
        s, t = s[::-1], eng.base(t[::-1])
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return MaxDivisorSplit(Word.from_codes(w.n, s), Word.from_codes(w.n, t))


def x_divisors(w: Word) -> list[int]:
    return rewriter(w.n).x_divisors(_codes(w))


def class_degrees(cls: EquivalenceClass) -> set[Degrees]:
    return {degrees(Word.from_codes(cls.n, m)) for m in cls.members}
