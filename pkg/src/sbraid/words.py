"""
Words in the Artin alphabet of the singular braid monoid SB_n.

A word over n strands is a sequence of letters s_i (a braid crossing),
s_i^-1 (its inverse) and x_i (a singular crossing), 1 <= i <= n-1.
The textual form is whitespace separated tokens::

    s3     sigma_3
    s3-    sigma_3 inverse
    x3     x_3

Internally the positive part of the theory works on *codes*: a positive
letter is an int with s_i -> i and x_i -> n-1+i.  Integer order on codes is
then exactly the letter order s_1 < ... < s_{n-1} < x_1 < ... < x_{n-1}
used to pick bases, so tuple comparison of codes is lexicographic comparison
of words.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import NonInvertible, NotPositive, ParseError


class Kind(enum.Enum):
    SIGMA = "s"
    SIGMA_INV = "s-"
    X = "x"


class Letter(NamedTuple):
    kind: Kind
    index: int

    def __str__(self) -> str:
        if self.kind is Kind.SIGMA_INV:
            return f"s{self.index}-"
        return f"{self.kind.value}{self.index}"


class Degrees(NamedTuple):
    deg_sigma: int
    deg_x: int
    total: int

    def __add__(self, other):  # componentwise, not tuple concatenation
        return Degrees(*(a + b for a, b in zip(self, other)))


def check_strands(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"strand count must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        check_strands(self.n)
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise ValueError(f"letter {letter} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.n, self.letters[item])
        return self.letters[item]

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return Word(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** -k
        return Word(self.n, self.letters * k)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word(n={self.n}, {format_word(self)!r})"

    @property
    def is_positive(self) -> bool:
        return all(l.kind is not Kind.SIGMA_INV for l in self.letters)

    def codes(self) -> tuple[int, ...]:
        """Positive letter codes; raises NotPositive on an inverse letter."""
        return encode(self)

    @classmethod
    def from_codes(cls, n: int, codes: Iterable[int]) -> "Word":
        return cls(n, tuple(decode_letter(n, c) for c in codes))

    @classmethod
    def identity(cls, n: int) -> "Word":
        return cls(n, ())


def sigma(n: int, *indices: int) -> Word:
    return Word(n, tuple(Letter(Kind.SIGMA, i) for i in indices))


def x(n: int, *indices: int) -> Word:
    return Word(n, tuple(Letter(Kind.X, i) for i in indices))


def encode_letter(n: int, letter: Letter) -> int:
    if letter.kind is Kind.SIGMA:
        return letter.index
    if letter.kind is Kind.X:
        return n - 1 + letter.index
    raise NotPositive(f"inverse letter {letter} has no positive code")


def decode_letter(n: int, code: int) -> Letter:
    if 1 <= code <= n - 1:
        return Letter(Kind.SIGMA, code)
    if n <= code <= 2 * n - 2:
        return Letter(Kind.X, code - n + 1)
    raise ValueError(f"code {code} out of range for n={n}")


def encode(w: Word) -> tuple[int, ...]:
    return tuple(encode_letter(w.n, l) for l in w.letters)


def require_positive(w: Word) -> None:
    if not w.is_positive:
        raise NotPositive(f"expected a positive word, got {format_word(w)!r}")


_TOKEN = re.compile(r"([sx])(\d+)(-?)")


def parse(text: str, n: int) -> Word:
    """
    Parse a whitespace separated token string.

    >>> format_word(parse("s1 s2- x1", 3))
    's1 s2- x1'
    """
    check_strands(n)
    letters = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None or (m.group(1) == "x" and m.group(3)):
            raise ParseError(f"malformed token {tok!r}")
        index = int(m.group(2))
        if not 1 <= index <= n - 1:
            raise ParseError(f"index out of range in {tok!r}: need 1 <= i <= {n - 1}")
        if m.group(1) == "x":
            kind = Kind.X
        else:
            kind = Kind.SIGMA_INV if m.group(3) else Kind.SIGMA
        letters.append(Letter(kind, index))
    return Word(n, tuple(letters))


def format_word(w: Word) -> str:
    return " ".join(str(l) for l in w.letters)


def degrees(w: Word) -> Degrees:
    ds = dx = 0
    for l in w.letters:
        if l.kind is Kind.SIGMA:
            ds += 1
        elif l.kind is Kind.SIGMA_INV:
            ds -= 1
        else:
            dx += 1
    return Degrees(ds, dx, ds + dx)


def reflect(w: Word) -> Word:
    """The index reflection i -> n-i on every letter (an involution)."""
    return Word(w.n, tuple(Letter(l.kind, w.n - l.index) for l in w.letters))


def reflect_codes(n: int, codes: Sequence[int]) -> tuple[int, ...]:
    # s_i -> s_{n-i} is i -> n-i; x_i (code n-1+i) -> x_{n-i} (code 2n-1-i)
    return tuple(n - c if c < n else 3 * n - 2 - c for c in codes)


def lex_compare(a: Word, b: Word) -> int:
    """-1, 0 or 1 as a precedes, equals or follows b in the letter order."""
    if a.n != b.n:
        raise ValueError("words live on different strand counts")
    ca, cb = encode(a), encode(b)
    return (ca > cb) - (ca < cb)


def invert(w: Word) -> Word:
    flip = {Kind.SIGMA: Kind.SIGMA_INV, Kind.SIGMA_INV: Kind.SIGMA}
    out = []
    for l in reversed(w.letters):
        if l.kind is Kind.X:
            raise NonInvertible(f"{format_word(w)!r} contains the singular letter {l}")
        out.append(Letter(flip[l.kind], l.index))
    return Word(w.n, tuple(out))


def free_reduce(w: Word) -> Word:
    """Cancel adjacent s_i s_i^-1 and s_i^-1 s_i pairs."""
    stack: list[Letter] = []
    for l in w.letters:
        if stack and l.kind is not Kind.X and stack[-1].index == l.index and {
            stack[-1].kind, l.kind} == {Kind.SIGMA, Kind.SIGMA_INV}:
            stack.pop()
        else:
            stack.append(l)
    return Word(w.n, tuple(stack))


def sigma_permutation(w: Word) -> tuple[int, ...]:
    """
    Permutation induced by the crossing letters, singular letters ignored.

    Every relation of SB_n preserves it, so it is a cheap invariant for
    rejecting equalities.
    """
    perm = list(range(w.n))
    for l in w.letters:
        if l.kind is not Kind.X:
            i = l.index
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)
