"""
Band generators for SB_n.

``a[t,s]`` (1 <= s < t <= n) is the crossing of strands s and t passing the
strands in between, ``b[t,s]`` the singular band of the same shape::

    a[t,s] = (s_{t-1} ... s_{s+1}) s_s  (s_{s+1}^-1 ... s_{t-1}^-1)
    b[t,s] = (s_{t-1} ... s_{s+1}) x_s  (s_{s+1}^-1 ... s_{t-1}^-1)

Band words have no rewriting theory of their own here: two band words are
equal exactly when their Artin images are, which :func:`sbraid.garside.equal`
decides.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .errors import BoundExceeded, ParseError
from .garside import equal
from .words import Kind, Letter, Word, check_strands


class BandKind(enum.Enum):
    A = "a"
    A_INV = "a-"
    B = "b"


class BandLetter(NamedTuple):
    kind: BandKind
    t: int
    s: int

    def __str__(self) -> str:
        tail = "-" if self.kind is BandKind.A_INV else ""
        return f"{self.kind.value[0]}[{self.t},{self.s}]{tail}"


def _check_pair(t: int, s: int, n: int) -> None:
    if not 1 <= s < t <= n:
        raise ValueError(f"band indices need 1 <= s < t <= n, got t={t}, s={s}, n={n}")


@dataclass(frozen=True)
class BandWord:
    n: int
    letters: tuple[BandLetter, ...] = ()

    def __post_init__(self):
        check_strands(self.n)
        object.__setattr__(self, "letters", tuple(self.letters))
        for l in self.letters:
            _check_pair(l.t, l.s, self.n)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BandWord") -> "BandWord":
        if not isinstance(other, BandWord):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("band words on different strand counts")
        return BandWord(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return format_band(self)


def a(n: int, t: int, s: int) -> BandWord:
    return BandWord(n, (BandLetter(BandKind.A, t, s),))


def a_inv(n: int, t: int, s: int) -> BandWord:
    return BandWord(n, (BandLetter(BandKind.A_INV, t, s),))


def b(n: int, t: int, s: int) -> BandWord:
    return BandWord(n, (BandLetter(BandKind.B, t, s),))


def identity(n: int) -> BandWord:
    return BandWord(n, ())


def product(n: int, words: Iterable[BandWord]) -> BandWord:
    out = identity(n)
    for w in words:
        out = out * w
    return out


_TOKEN = re.compile(r"([ab])\[(\d+),(\d+)\](-?)")


def parse_band(text: str, n: int) -> BandWord:
    check_strands(n)
    letters = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None or (m.group(1) == "b" and m.group(4)):
            raise ParseError(f"malformed band token {tok!r}")
        t, s = int(m.group(2)), int(m.group(3))
        if not 1 <= s < t <= n:
            raise ParseError(f"band indices out of range in {tok!r} for n={n}")
        if m.group(1) == "b":
            kind = BandKind.B
        else:
            kind = BandKind.A_INV if m.group(4) else BandKind.A
        letters.append(BandLetter(kind, t, s))
    return BandWord(n, tuple(letters))


def format_band(w: BandWord) -> str:
    return " ".join(str(l) for l in w.letters)


_MIDDLE = {BandKind.A: Kind.SIGMA, BandKind.A_INV: Kind.SIGMA_INV, BandKind.B: Kind.X}


def artin_letter(l: BandLetter) -> tuple[Letter, ...]:
    up = tuple(Letter(Kind.SIGMA, i) for i in range(l.t - 1, l.s, -1))
    down = tuple(Letter(Kind.SIGMA_INV, i) for i in range(l.s + 1, l.t))
    return up + (Letter(_MIDDLE[l.kind], l.s),) + down


def artin_of(bw: BandWord) -> Word:
    return Word(bw.n, tuple(x for l in bw.letters for x in artin_letter(l)))


def band_of_artin(w: Word) -> BandWord:
    kinds = {Kind.SIGMA: BandKind.A, Kind.SIGMA_INV: BandKind.A_INV, Kind.X: BandKind.B}
    return BandWord(w.n, tuple(BandLetter(kinds[l.kind], l.index + 1, l.index)
                               for l in w.letters))


def band_equal(u: BandWord, v: BandWord) -> bool:
    return equal(artin_of(u), artin_of(v))


def delta_band(n: int) -> BandWord:
    """delta = a[n,n-1] a[n-1,n-2] ... a[2,1]."""
    check_strands(n)
    return BandWord(n, tuple(BandLetter(BandKind.A, k + 1, k) for k in range(n - 1, 0, -1)))


def delta_left_factor(t: int, s: int, n: int) -> BandWord:
    """
    A spelling of delta that starts with ``a[t,s]``.

    Walk delta's letters a[k+1,k] for k = n-1 down to 1, replace a[t+1,t]
    by a[t+1,s], drop a[s+1,s], and put a[t,s] in front.
    """
    check_strands(n)
    _check_pair(t, s, n)
    letters = [BandLetter(BandKind.A, t, s)]
    for k in range(n - 1, 0, -1):
        if k == t:
            letters.append(BandLetter(BandKind.A, t + 1, s))
        elif k != s:
            letters.append(BandLetter(BandKind.A, k + 1, k))
    return BandWord(n, tuple(letters))


def band_delta_commute(l: BandLetter, n: int) -> BandLetter:
    """The letter ``l'`` with ``l delta = delta l'``: indices shift by one, wrapping at n."""
    _check_pair(l.t, l.s, n)
    if l.t < n:
        return BandLetter(l.kind, l.t + 1, l.s + 1)
    return BandLetter(l.kind, l.s + 1, 1)


# -- presentation check -------------------------------------------------------


def _pairs(n: int):
    return [(t, s) for t in range(2, n + 1) for s in range(1, t)]


def _triples(n: int):
    return [(t, s, r) for t in range(3, n + 1) for s in range(2, t) for r in range(1, s)]


def _far(t, s, r, q) -> bool:
    return (t - r) * (t - q) * (s - r) * (s - q) > 0


def _up(n, hi, lo):
    """a[hi,hi-1] a[hi-1,hi-2] ... a[lo+1,lo]"""
    return product(n, (a(n, k + 1, k) for k in range(hi - 1, lo - 1, -1)))


def _down(n, lo, hi):
    """a[lo+1,lo]^-1 ... a[hi,hi-1]^-1"""
    return product(n, (a_inv(n, k + 1, k) for k in range(lo, hi)))


Relation = tuple[BandWord, BandWord]


def presentation_families(n: int) -> list[tuple[str, list[Relation]]]:
    """Every instance of the band-generator defining relations on n strands."""
    P, T = _pairs(n), _triples(n)
    e = identity(n)
    return [
        ("a-a far commutation",
         [(a(n, t, s) * a(n, r, q), a(n, r, q) * a(n, t, s))
          for i, (t, s) in enumerate(P) for (r, q) in P[i + 1:] if _far(t, s, r, q)]),
        ("a-a triangle",
         [rel for t, s, r in T for rel in (
             (a(n, t, s) * a(n, s, r), a(n, t, r) * a(n, t, s)),
             (a(n, t, r) * a(n, t, s), a(n, s, r) * a(n, t, r)))]),
        ("a inverse",
         [rel for t, s in P for rel in (
             (a(n, t, s) * a_inv(n, t, s), e),
             (a_inv(n, t, s) * a(n, t, s), e))]),
        ("a-b far commutation",
         [(a(n, t, s) * b(n, r, q), b(n, r, q) * a(n, t, s))
          for t, s in P for r, q in P if _far(t, s, r, q)]),
        ("a-b same band",
         [(a(n, t, s) * b(n, t, s), b(n, t, s) * a(n, t, s)) for t, s in P]),
        ("a[t,s] b[s,r] = b[t,r] a[t,s]",
         [(a(n, t, s) * b(n, s, r), b(n, t, r) * a(n, t, s)) for t, s, r in T]),
        ("a[s,r] b[t,r] = b[t,s] a[s,r]",
         [(a(n, s, r) * b(n, t, r), b(n, t, s) * a(n, s, r)) for t, s, r in T]),
        ("a[t,r] b[t,s] = b[s,r] a[t,r]",
         [(a(n, t, r) * b(n, t, s), b(n, s, r) * a(n, t, r)) for t, s, r in T]),
        ("b-b far commutation",
         [(b(n, t, s) * b(n, r, q), b(n, r, q) * b(n, t, s))
          for i, (t, s) in enumerate(P) for (r, q) in P[i + 1:] if _far(t, s, r, q)]),
    ]


def derived_families(n: int) -> list[tuple[str, list[Relation]]]:
    """The Artin-side relations rewritten in band letters, plus the band definitions."""
    idx = range(1, n)
    A = lambda i: a(n, i + 1, i)  # noqa: E731
    Ai = lambda i: a_inv(n, i + 1, i)  # noqa: E731
    B = lambda i: b(n, i + 1, i)  # noqa: E731
    P = _pairs(n)
    return [
        ("adjacent a far commutation",
         [(A(i) * A(j), A(j) * A(i)) for i in idx for j in idx if j - i > 1]),
        ("adjacent a braid relation",
         [(A(i) * A(i + 1) * A(i), A(i + 1) * A(i) * A(i + 1)) for i in range(1, n - 1)]),
        ("a[t,s] as conjugate of a[s+1,s]",
         [(a(n, t, s), _up(n, t, s + 1) * A(s) * _down(n, s + 1, t)) for t, s in P]),
        ("a[t,s]^-1 as conjugate of a[s+1,s]^-1",
         [(a_inv(n, t, s), _up(n, t, s + 1) * Ai(s) * _down(n, s + 1, t)) for t, s in P]),
        ("adjacent b far commutation",
         [(B(i) * B(j), B(j) * B(i)) for i in idx for j in idx if j - i > 1]),
        ("adjacent b-a commutation",
         [(B(i) * A(j), A(j) * B(i)) for i in idx for j in idx if abs(i - j) != 1]),
        ("a a b mixed relation",
         [(A(i) * A(i + 1) * B(i), B(i + 1) * A(i) * A(i + 1)) for i in range(1, n - 1)]),
        ("a a b mixed relation, mirrored",
         [(A(i + 1) * A(i) * B(i + 1), B(i) * A(i + 1) * A(i)) for i in range(1, n - 1)]),
        ("b[q,p] as conjugate of b[p+1,p]",
         [(b(n, q, p), _up(n, q, p + 1) * B(p) * _down(n, p + 1, q)) for q, p in P]),
    ]


@dataclass
class FamilyReport:
    name: str
    instances: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class PresentationReport:
    n: int
    families: list[FamilyReport]

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.families)

    def to_json(self) -> dict:
        return {"n": self.n,
                "families": [{"name": f.name, "instances": f.instances, "failures": f.failures}
                             for f in self.families]}


def _check(families, holds: Callable[[BandWord, BandWord], bool]) -> list[FamilyReport]:
    out = []
    for name, rels in families:
        failures = [f"{format_band(l) or '1'} = {format_band(r) or '1'}"
                    for l, r in rels if not holds(l, r)]
        out.append(FamilyReport(name, len(rels), failures))
    return out


def verify_presentation(n: int, bound: int = 5, derived: bool = True) -> PresentationReport:
    """
    Check every relation instance of the band presentation in SB_n.

    This proves soundness only (the relations hold); that they also suffice
    is not something a finite check can show.
    """
    check_strands(n)
    if n > bound:
        raise BoundExceeded(f"verify_presentation requested for n={n} > bound {bound}")
    families = presentation_families(n)
    if derived:
        families += derived_families(n)
    return PresentationReport(n, _check(families, band_equal))
