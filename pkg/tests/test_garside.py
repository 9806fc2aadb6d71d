import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_positive_words, burau
from sbraid.errors import NotPositive, XLettersPresent
from sbraid.garside import (Block, GreedyForm, NormalForm, complement_left, complement_right,
                            delta, delta_commute_pos, delta_power, delta_power_split, equal,
                            greedy_form, is_permutation_braid, normal_form, reconstruct)
from sbraid.rewrite import Rewriter, enumerate_class, left_divide, positively_equal, right_divide
from sbraid.sampling import random_word, respell
from sbraid.words import Kind, Letter, Word, degrees, free_reduce, invert, parse, sigma

P = parse


def words(n, max_size=8, kinds=(Kind.SIGMA, Kind.SIGMA_INV, Kind.X)):
    letter = st.builds(Letter, st.sampled_from(kinds), st.integers(1, n - 1))
    return st.lists(letter, max_size=max_size).map(lambda ls: Word(n, tuple(ls)))


# -- Delta and complements ------------------------------------------------------------

def test_delta_spelling():
    assert delta(2) == P("s1", 2)
    assert delta(3) == P("s1 s2 s1", 3)
    assert delta(4) == P("s1 s2 s3 s1 s2 s1", 4)
    for n in range(2, 7):
        assert len(delta(n)) == n * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complements(n):
    for i in range(1, n):
        s = sigma(n, i)
        assert positively_equal(s * complement_right(i, n), delta(n))
        assert positively_equal(complement_left(i, n) * s, delta(n))
    assert complement_right(1, 3) == P("s2 s1", 3)
    assert complement_left(1, 3) == P("s1 s2", 3)


def test_complement_bounds():
    with pytest.raises(ValueError):
        complement_right(3, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: words(n, 8, (Kind.SIGMA, Kind.X))))
def test_delta_commute_pos(w):
    d = delta(w.n)
    assert positively_equal(w * d, d * delta_commute_pos(w))
    assert delta_commute_pos(delta_commute_pos(w)) == w


def test_delta_commute_pos_rejects_inverses():
    with pytest.raises(NotPositive):
        delta_commute_pos(P("s1-", 3))


def test_delta_power_split():
    t, tail = delta_power_split(delta(3) ** 2 * P("x1", 3))
    assert t == 2 and tail == P("x1", 3)
    t, tail = delta_power_split(P("s2 s1 x1 s1", 3))
    assert t == 0
    t, tail = delta_power_split(P("s1 s2 s2 s1", 3))
    assert t == 0 and tail == P("s1 s2 s2 s1", 3)
    # x1 Delta = Delta x2
    t, tail = delta_power_split(P("x1", 3) * delta(3))
    assert t == 1 and tail == P("x2", 3)


# -- normal forms ---------------------------------------------------------------

def test_normal_form_examples():
    assert normal_form(P("s1-", 3)) == NormalForm(3, -1, P("s1 s2", 3))
    assert normal_form(P("x1", 3) * delta(3)) == NormalForm(3, 1, P("x2", 3))
    assert normal_form(Word(3)) == NormalForm(3, 0, Word(3))
    assert normal_form(delta(4) ** -2) == NormalForm(4, -2, Word(4))
    assert normal_form(P("s1 s1-", 3)) == NormalForm(3, 0, Word(3))


def test_normal_form_json():
    assert normal_form(P("s1-", 3)).to_json() == {"n": 3, "power": -1, "base": "s1 s2"}
    right = normal_form(P("s1-", 3), side="right")
    assert right.to_json()["side"] == "right"


def test_normal_form_bad_side():
    with pytest.raises(ValueError):
        normal_form(P("s1", 3), side="middle")


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: words(n, 9)))
def test_normal_form_is_sound(w):
    nf = normal_form(w)
    assert burau(reconstruct(nf)) == burau(w)
    # the base is prime to Delta and is the least spelling of its class
    t, _ = delta_power_split(nf.base)
    assert t == 0
    if w.n <= 4:
        assert nf.base.codes() == min(enumerate_class(nf.base).members)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 4).flatmap(lambda n: words(n, 8)), st.integers(0, 2 ** 32))
def test_normal_form_respelling_invariance(w, seed):
    rng = random.Random(seed)
    nf = normal_form(w)
    for _ in range(3):
        assert normal_form(respell(w, rng, steps=6)) == nf


@settings(max_examples=120, deadline=None)
@given(words(3, 9, (Kind.SIGMA, Kind.SIGMA_INV)), words(3, 9, (Kind.SIGMA, Kind.SIGMA_INV)))
def test_braid_equality_matches_burau_n3(u, v):
    # the Burau representation is faithful on three strands
    assert equal(u, v) == (burau(u) == burau(v))


def test_equal_examples():
    assert equal(P("x1 s2 s1", 3), P("s2 s1 x2", 3))
    assert not equal(P("x1 x2", 3), P("x2 x1", 3))
    assert equal(P("s1 s1-", 3), Word(3))
    with pytest.raises(ValueError):
        equal(P("s1", 3), P("s1", 4))


@settings(max_examples=80, deadline=None)
@given(words(3, 8, (Kind.SIGMA, Kind.SIGMA_INV)))
def test_free_reduction_is_respected(w):
    assert normal_form(w) == normal_form(free_reduce(w))
    assert equal(w * invert(w), Word(3))


def test_embedding_exhaustive_n3_len4():
    ws = list(all_positive_words(3, 4))
    forms = {w: normal_form(w) for w in ws}
    for w in ws:
        members = set(enumerate_class(w).words())
        for v in ws:
            assert (forms[w] == forms[v]) == (v in members)


@pytest.mark.parametrize("n", [3, 4])
def test_delta_divisibility_criterion(n):
    eng = Rewriter(n, exhaustive=True)
    d = delta(n)
    for w in all_positive_words(n, 5 if n == 3 else 4):
        by_all = all(left_divide(w, sigma(n, i)) is not None for i in range(1, n))
        cls = eng.klass(w.codes())
        dcls = eng.klass(d.codes())
        by_delta = any(m[:len(d)] in dcls for m in cls)
        assert by_all == by_delta


def test_sb2_is_z_plus_n():
    rng = random.Random(0)
    for _ in range(300):
        u, v = random_word(2, rng.randint(0, 8), rng), random_word(2, rng.randint(0, 8), rng)
        assert equal(u, v) == (degrees(u) == degrees(v))


def test_delta_power():
    assert delta_power(3, 0) == Word(3)
    assert normal_form(delta_power(3, -3)).power == -3
    assert equal(delta_power(4, 2) * delta_power(4, -2), Word(4))


# -- right forms --------------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: words(n, 8)), st.integers(0, 2 ** 32))
def test_right_normal_form(w, seed):
    nf = normal_form(w, side="right")
    assert equal(reconstruct(nf), w)
    assert right_divide(nf.base, delta(w.n)) is None
    rng = random.Random(seed)
    assert normal_form(respell(w, rng), side="right") == nf


# -- permutation braids and greedy forms ----------------------------------------------

def test_is_permutation_braid():
    assert is_permutation_braid(P("s1 s2 s1", 3))
    assert is_permutation_braid(Word(3))
    assert not is_permutation_braid(P("s1 s1", 3))
    assert not is_permutation_braid(P("s1 s2 s1 s2", 3))
    with pytest.raises(XLettersPresent):
        is_permutation_braid(P("x1", 3))
    with pytest.raises(NotPositive):
        is_permutation_braid(P("s1-", 3))


@pytest.mark.parametrize("n", [3, 4])
def test_permutation_braids_are_delta_divisors(n):
    d = delta(n)
    for w in all_positive_words(n, 5):
        if degrees(w).deg_x:
            continue
        assert is_permutation_braid(w) == (left_divide(d, w) is not None)


def test_greedy_examples():
    g = greedy_form(P("s2 s1 x1 s1", 3))
    assert g == GreedyForm(3, 0, (Block((P("s2 s1", 3), P("s1", 3)), (1,)),))
    assert greedy_form(P("x1 x2", 3)) == GreedyForm(3, 0, (Block((), (1, 2)),))
    assert greedy_form(delta(3) ** 2) == GreedyForm(3, 2, ())
    assert greedy_form(P("x2 x1", 3)).blocks == (Block((), (2, 1)),)
    assert greedy_form(P("x1 x2", 3)).to_json() == {
        "n": 3, "power": 0, "blocks": [{"fragments": [], "xs": [1, 2]}]}


def _check_greedy_shape(g: GreedyForm):
    n = g.n
    for k, b in enumerate(g.blocks):
        # only a trailing braid part may come without singular letters
        assert b.xs or k == len(g.blocks) - 1
        for f in b.fragments:
            assert len(f) and is_permutation_braid(f)
        # fragments are maximal: the next fragment's first letters cannot be absorbed
        for f, nxt in zip(b.fragments, b.fragments[1:]):
            for i in range(1, n):
                if left_divide(nxt, sigma(n, i)) is not None:
                    assert not is_permutation_braid(f * sigma(n, i))


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: words(n, 9)))
def test_greedy_reconstructs(w):
    for side in ("left", "right"):
        g = greedy_form(w, side=side)
        assert equal(reconstruct(g), w)
        if side == "left":
            _check_greedy_shape(g)


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 4).flatmap(lambda n: words(n, 8, (Kind.SIGMA, Kind.X))))
def test_greedy_invariant_over_class(w):
    g, gr = greedy_form(w), greedy_form(w, side="right")
    for m in enumerate_class(w).words()[:40]:
        assert greedy_form(m) == g
        assert greedy_form(m, side="right") == gr


def test_greedy_exhaustive_n3_len5():
    seen = set()
    for w in all_positive_words(3, 5):
        if w in seen:
            continue
        cls = enumerate_class(w).words()
        seen.update(cls)
        forms = {greedy_form(m) for m in cls}
        assert len(forms) == 1


def test_reconstruct_roundtrip_mixed():
    rng = random.Random(11)
    for _ in range(200):
        w = random_word(rng.randint(2, 5), rng.randint(0, 10), rng)
        assert equal(reconstruct(normal_form(w)), w)
        assert equal(reconstruct(greedy_form(w)), w)


def test_center_small():
    for n in (3, 4):
        d2 = delta(n) ** 2
        for i, k in itertools.product(range(1, n), (Kind.SIGMA, Kind.X)):
            g = Word(n, (Letter(k, i),))
            assert equal(d2 * g, g * d2)
    assert not equal(delta(3) * sigma(3, 1), sigma(3, 1) * delta(3))
