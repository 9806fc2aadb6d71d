"""
Conjugacy in SB_n under its unit group (the braid group).

``u`` and ``v`` are conjugate when ``v = g^-1 u g`` for a braid ``g``.  The
decider compares summit sets: the normal forms of maximal Delta-power that
are reachable from the input by repeated conjugation with permutation
braids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BoundExceeded, CapExceeded, NonInvertible
from .garside import NormalForm, normal_form, reconstruct
from .rewrite import rewriter
from .words import Kind, Word, check_strands, degrees, format_word, invert

DEFAULT_STRAND_BOUND = 5
DEFAULT_MEMBER_CAP = 100_000


def is_unit(w: Word) -> bool:
    return degrees(w).deg_x == 0


def conjugate(w: Word, g: Word) -> Word:
    """The unreduced word ``g^-1 w g``."""
    if not is_unit(g):
        raise NonInvertible(f"conjugator {format_word(g)!r} contains singular letters")
    return invert(g) * w * g


@lru_cache(maxsize=None)
def _simple_codes(n: int) -> tuple[tuple[int, ...], ...]:
    # walk the weak order: s_i extends a permutation braid iff the two
    # strands at positions i, i+1 have not crossed yet
    start = tuple(range(n))
    found = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for perm in frontier:
            for i in range(1, n):
                if perm[i - 1] < perm[i]:
                    p = list(perm)
                    p[i - 1], p[i] = p[i], p[i - 1]
                    p = tuple(p)
                    if p not in found:
                        found[p] = found[perm] + (i,)
                        nxt.append(p)
        frontier = nxt
    eng = rewriter(n)
    return tuple(sorted((eng.base(c) for c in found.values()), key=lambda c: (len(c), c)))


def simple_elements(n: int, bound: int = DEFAULT_STRAND_BOUND) -> list[Word]:
    """All n! positive permutation braids, each spelled as its base."""
    check_strands(n)
    if n > bound:
        raise BoundExceeded(f"simple elements requested for n={n} > bound {bound}")
    return [Word.from_codes(n, c) for c in _simple_codes(n)]


@dataclass(frozen=True)
class SummitSet:
    n: int
    summit_power: int
    members: frozenset
    # member -> conjugator g with g^-1 w g equal to the member
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def sorted_members(self) -> list[NormalForm]:
        return sorted(self.members, key=NormalForm.sort_key)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "summit_power": self.summit_power,
            "members": [m.to_json() for m in self.sorted_members()],
        }


def summit_set(w: Word, bound: int = DEFAULT_STRAND_BOUND,
               cap: int = DEFAULT_MEMBER_CAP) -> SummitSet:
    """
    Close the normal form of ``w`` under conjugation by simple elements.

    Only forms of the largest power seen so far are kept; a conjugate of
    higher power restarts the closure from it.  Power times |Delta| is
    bounded by the crossing degree, so the restarts are finite.
    """
    n = w.n
    simples = [s for s in simple_elements(n, bound) if len(s)]
    start = normal_form(w)
    witnesses = {start: Word.identity(n)}
    best = start.power
    frontier = [start]
    while frontier:
        e = frontier.pop()
        ew = reconstruct(e)
        g = witnesses[e]
        for s in simples:
            c = normal_form(invert(s) * ew * s)
            if c.power < best or c in witnesses:
                continue
            if c.power > best:
                best = c.power
                witnesses = {c: g * s}
                frontier = [c]
                break
            witnesses[c] = g * s
            frontier.append(c)
            if len(witnesses) > cap:
                raise CapExceeded(f"summit set exceeds {cap} members",
                                  frozenset(witnesses))
    return SummitSet(n, best, frozenset(witnesses), witnesses)


def _cycle_type(perm) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for i in range(len(perm)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def _full_permutation(w: Word) -> tuple[int, ...]:
    # x_i acts as the transposition (i i+1) too; every relation respects this
    perm = list(range(w.n))
    for l in w.letters:
        i = l.index
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def _sigma_only_permutation(w: Word) -> tuple[int, ...]:
    perm = list(range(w.n))
    for l in w.letters:
        if l.kind is not Kind.X:
            i = l.index
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def conjugate_p(u: Word, v: Word, bound: int = DEFAULT_STRAND_BOUND,
                cap: int = DEFAULT_MEMBER_CAP) -> bool:
    if u.n != v.n:
        raise ValueError(f"words on different strand counts ({u.n} vs {v.n})")
    if degrees(u) != degrees(v):
        return False
    if (_cycle_type(_full_permutation(u)) != _cycle_type(_full_permutation(v))
            or _cycle_type(_sigma_only_permutation(u)) != _cycle_type(_sigma_only_permutation(v))):
        return False
    return summit_set(u, bound, cap).members == summit_set(v, bound, cap).members
