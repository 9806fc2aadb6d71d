"""Seeded random words and random respellings of a word."""

from __future__ import annotations

import random
from typing import Optional

from .rewrite import rewriter
from .words import Kind, Letter, Word, check_strands

PROFILES = {
    "mixed": (Kind.SIGMA, Kind.SIGMA_INV, Kind.X),
    "positive": (Kind.SIGMA, Kind.X),
    "braid": (Kind.SIGMA, Kind.SIGMA_INV),
    "positive-braid": (Kind.SIGMA,),
}


def random_word(n: int, length: int, rng: random.Random, profile: str = "mixed") -> Word:
    """Uniform word of the given length over the alphabet selected by ``profile``."""
    check_strands(n)
    try:
        kinds = PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}") from None
    alphabet = [Letter(k, i) for k in kinds for i in range(1, n)]
    return Word(n, tuple(rng.choice(alphabet) for _ in range(length)))


def _positive_runs(w: Word):
    start = None
    for p, l in enumerate(w.letters + (None,)):
        if l is not None and l.kind is not Kind.SIGMA_INV:
            if start is None:
                start = p
        elif start is not None:
            yield start, p
            start = None


def relation_moves(w: Word) -> list[Word]:
    """All words one positive relation away from ``w`` (inverse letters stay put)."""
    eng = rewriter(w.n)
    out = []
    for a, b in _positive_runs(w):
        run = Word(w.n, w.letters[a:b])
        for v in eng.neighbors(run.codes()):
            out.append(Word(w.n, w.letters[:a] + Word.from_codes(w.n, v).letters + w.letters[b:]))
    return out


def respell(w: Word, rng: random.Random, steps: int = 4,
            max_length: Optional[int] = None) -> Word:
    """
    A random word equal to ``w`` in SB_n.

    Each step applies one positive relation somewhere, inserts a cancelling
    pair s_i s_i^-1 (either order), or deletes one.
    """
    n = w.n
    for _ in range(steps):
        options = ["relation", "insert", "delete"]
        if max_length is not None and len(w) + 2 > max_length:
            options.remove("insert")
        move = rng.choice(options)
        if move == "relation":
            moves = relation_moves(w)
            if moves:
                w = rng.choice(moves)
                continue
            move = "insert"
        if move == "delete":
            spots = [p for p in range(len(w) - 1)
                     if w[p].index == w[p + 1].index
                     and {w[p].kind, w[p + 1].kind} == {Kind.SIGMA, Kind.SIGMA_INV}]
            if spots:
                p = rng.choice(spots)
                w = Word(n, w.letters[:p] + w.letters[p + 2:])
                continue
            move = "insert"
        if move == "insert" and (max_length is None or len(w) + 2 <= max_length):
            i = rng.randint(1, n - 1)
            pair = (Letter(Kind.SIGMA, i), Letter(Kind.SIGMA_INV, i))
            if rng.random() < 0.5:
                pair = pair[::-1]
            p = rng.randint(0, len(w))
            w = Word(n, w.letters[:p] + pair + w.letters[p:])
    return w
