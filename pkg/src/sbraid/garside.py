"""
Garside theory for SB_n: the half twist, normal forms and greedy forms.

Every element of SB_n is uniquely ``Delta^m * A`` with ``A`` a positive
word not left-divisible by Delta, spelled as the lexicographically least
member of its positive class.  Equality of arbitrary words (inverses
allowed) reduces to comparing these pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

from .errors import XLettersPresent
from .rewrite import Codes, Rewriter, rewriter
from .words import (Kind, Word, check_strands, degrees, free_reduce, invert,
                    reflect, reflect_codes, require_positive, sigma_permutation)


@lru_cache(maxsize=None)
def delta_codes(n: int) -> Codes:
    check_strands(n)
    out: list[int] = []
    for t in range(n - 1, 0, -1):
        out.extend(range(1, t + 1))
    return tuple(out)


def delta(n: int) -> Word:
    """The half twist Pi_{n-1} ... Pi_1 with Pi_t = s_1 ... s_t."""
    return Word.from_codes(n, delta_codes(n))


@lru_cache(maxsize=None)
def _complement_right_codes(n: int, i: int) -> Codes:
    eng = rewriter(n)
    return eng.base(eng.divide(delta_codes(n), i))


@lru_cache(maxsize=None)
def _complement_left_codes(n: int, i: int) -> Codes:
    eng = rewriter(n)
    return eng.base(eng.divide_right(delta_codes(n), i))


def _check_index(i: int, n: int) -> None:
    check_strands(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")


def complement_right(i: int, n: int) -> Word:
    """The positive word D with s_i D = Delta."""
    _check_index(i, n)
    return Word.from_codes(n, _complement_right_codes(n, i))


def complement_left(i: int, n: int) -> Word:
    """The positive word D with D s_i = Delta."""
    _check_index(i, n)
    return Word.from_codes(n, _complement_left_codes(n, i))


def delta_commute_pos(w: Word) -> Word:
    """Return ``w'`` with ``Delta w' = w Delta``; this is the reflection of ``w``."""
    require_positive(w)
    return reflect(w)


def _split(eng: Rewriter, w: Codes, canonical: bool = True) -> tuple[int, Codes]:
    n = eng.n
    d = delta_codes(n)
    t = 0
    while (eng.kinds(w)[0] >= len(d)
           and all(eng.divide(w, i) is not None for i in range(1, n))):
        w = eng.left_divide(w, d)
        t += 1
    return t, (eng.base(w) if canonical else w)


def delta_power_split(w: Word) -> tuple[int, Word]:
    """
    Largest ``t`` with Delta^t dividing ``w`` on the left, and the quotient.

    Delta divides a positive word exactly when every s_i does, which is what
    the loop tests before dividing.
    """
    require_positive(w)
    t, tail = _split(rewriter(w.n), w.codes())
    return t, Word.from_codes(w.n, tail)


def _prenormal(w: Word) -> tuple[int, Codes]:
    """
    ``(m, A)`` with ``w = Delta^m A``, A positive, prime to Delta, a base.

    Each inverse letter s_i^-1 is replaced by ``D_i Delta^-1`` and the new
    Delta^-1 is carried to the front, reflecting everything it passes
    (``a Delta^-1 = Delta^-1 R(a)``).  The positive part is re-split after
    every letter so it never holds a power of Delta.
    """
    n = w.n
    eng = rewriter(n)
    m = 0
    p: Codes = ()
    for letter in free_reduce(w).letters:
        if letter.kind is Kind.SIGMA_INV:
            p = reflect_codes(n, p + _complement_right_codes(n, letter.index))
            m -= 1
        elif letter.kind is Kind.SIGMA:
            p = p + (letter.index,)
        else:
            p = p + (n - 1 + letter.index,)
        t, p = _split(eng, p, canonical=False)
        m += t
    return m, eng.base(p)


@dataclass(frozen=True)
class NormalForm:
    """
    ``Delta^power * base`` (side ``left``) or ``base * Delta^power`` (``right``).
    """
    n: int
    power: int
    base: Word
    side: str = "left"

    def to_json(self) -> dict:
        out = {"n": self.n, "power": self.power, "base": str(self.base)}
        if self.side != "left":
            out["side"] = self.side
        return out

    def sort_key(self):
        return self.power, self.base.codes()


def normal_form(w: Word, side: str = "left") -> NormalForm:
    n = w.n
    m, a = _prenormal(w)
    if side == "left":
        return NormalForm(n, m, Word.from_codes(n, a))
    if side == "right":
        # Delta^m A = R^m(A) Delta^m, and R preserves primality to Delta
        if m % 2:
            a = rewriter(n).base(reflect_codes(n, a))
        return NormalForm(n, m, Word.from_codes(n, a), "right")
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def equal(u: Word, v: Word) -> bool:
    """Word problem in SB_n."""
    if u.n != v.n:
        raise ValueError(f"words on different strand counts ({u.n} vs {v.n})")
    if degrees(u) != degrees(v) or sigma_permutation(u) != sigma_permutation(v):
        return False
    return _prenormal(u) == _prenormal(v)


def delta_power(n: int, m: int) -> Word:
    d = delta(n)
    return d ** m if m >= 0 else invert(d) ** -m


# -- permutation braids and greedy forms ------------------------------------


def _crosses_fresh(perm: list[int], crossed: set, i: int) -> bool:
    a, b = perm[i - 1], perm[i]
    return (min(a, b), max(a, b)) not in crossed


def _cross(perm: list[int], crossed: set, i: int) -> None:
    a, b = perm[i - 1], perm[i]
    crossed.add((min(a, b), max(a, b)))
    perm[i - 1], perm[i] = b, a


def is_permutation_braid(w: Word) -> bool:
    """True iff no two strands of the positive braid ``w`` cross twice."""
    require_positive(w)
    if degrees(w).deg_x:
        raise XLettersPresent(f"{w} is not a braid word")
    perm = list(range(w.n))
    crossed: set = set()
    for l in w.letters:
        if not _crosses_fresh(perm, crossed, l.index):
            return False
        _cross(perm, crossed, l.index)
    return True


class Block(NamedTuple):
    fragments: tuple[Word, ...]
    xs: tuple[int, ...]


@dataclass(frozen=True)
class GreedyForm:
    """
    ``Delta^power S_1 X_1 ... S_k X_k`` for side ``left``.

    For side ``right`` the element reads ``X_k S_k ... X_1 S_1 Delta^power``;
    blocks are always stored in reading order, and within a right block the
    singular letters come before the fragments.
    """
    n: int
    power: int
    blocks: tuple[Block, ...]
    side: str = "left"

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "power": self.power,
            "blocks": [{"fragments": [str(f) for f in b.fragments], "xs": list(b.xs)}
                       for b in self.blocks],
        }
        if self.side != "left":
            out["side"] = self.side
        return out


def _braid_fragments(eng: Rewriter, s: Codes) -> list[Codes]:
    """Left-greedy factorization of a braid word into maximal permutation braids."""
    frags = []
    rem = s
    while rem:
        perm = list(range(eng.n))
        crossed: set = set()
        frag: list[int] = []
        while True:
            for i in range(1, eng.n):
                if not _crosses_fresh(perm, crossed, i):
                    continue
                q = eng.divide(rem, i)
                if q is not None:
                    _cross(perm, crossed, i)
                    frag.append(i)
                    rem = q
                    break
            else:
                break
        frags.append(eng.base(tuple(frag)))
    return frags


def _sigma_divides(eng: Rewriter, w: Codes) -> bool:
    return any(eng.divide(w, i) is not None for i in range(1, eng.n))


def _greedy_blocks(eng: Rewriter, w: Codes) -> list[tuple[list[Codes], list[int]]]:
    n = eng.n
    blocks = []
    rem = w
    while rem:
        s, rem = eng.max_braid_divisor(rem)
        frags = _braid_fragments(eng, s)
        xs: list[int] = []
        while rem:
            for c in range(n, 2 * n - 1):
                q = eng.divide(rem, c)
                if q is not None:
                    xs.append(c - n + 1)
                    rem = q
                    break
            else:
                raise AssertionError("nonempty word prime to every s_i has no x divisor")
            if rem and _sigma_divides(eng, rem):
                break
        blocks.append((frags, xs))
    return blocks


def greedy_form(w: Word, side: str = "left") -> GreedyForm:
    n = w.n
    eng = rewriter(n)
    m, a = _prenormal(w)
    if side == "left":
        raw = _greedy_blocks(eng, a)
        blocks = tuple(
            Block(tuple(Word.from_codes(n, f) for f in frags), tuple(xs))
            for frags, xs in raw)
    elif side == "right":
        if m % 2:
            a = reflect_codes(n, a)
        raw = _greedy_blocks(eng, a[::-1])
        blocks = tuple(
            Block(tuple(Word.from_codes(n, eng.base(f[::-1])) for f in reversed(frags)),
                  tuple(reversed(xs)))
            for frags, xs in reversed(raw))
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return GreedyForm(n, m, blocks, side)


def reconstruct(form: Union[NormalForm, GreedyForm]) -> Word:
    n = form.n
    d = delta_power(n, form.power)
    if isinstance(form, NormalForm):
        return d * form.base if form.side == "left" else form.base * d
    body = Word.identity(n)
    for b in form.blocks:
        frags = Word(n, tuple(l for f in b.fragments for l in f.letters))
        xs = Word(n, tuple(l for i in b.xs for l in _x_letter(n, i)))
        body = body * (frags * xs if form.side == "left" else xs * frags)
    return d * body if form.side == "left" else body * d


def _x_letter(n: int, i: int) -> tuple:
    return Word.from_codes(n, (n - 1 + i,)).letters
