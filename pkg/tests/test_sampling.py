import random

import pytest

from oracles import burau
from sbraid.garside import equal
from sbraid.rewrite import positively_equal
from sbraid.sampling import PROFILES, random_word, relation_moves, respell
from sbraid.words import Kind, parse


def test_random_word_is_seeded():
    a = [random_word(4, 10, random.Random(7)) for _ in range(3)]
    b = [random_word(4, 10, random.Random(7)) for _ in range(3)]
    assert a == b


@pytest.mark.parametrize("profile", sorted(PROFILES))
def test_profiles(profile):
    rng = random.Random(1)
    kinds = set()
    for _ in range(50):
        w = random_word(3, 6, rng, profile)
        assert len(w) == 6
        kinds |= {l.kind for l in w.letters}
    assert kinds == set(PROFILES[profile])


def test_unknown_profile():
    with pytest.raises(ValueError):
        random_word(3, 4, random.Random(0), "weird")


def test_relation_moves():
    w = parse("s1 s2 s1- x1 x2", 3)
    for v in relation_moves(w):
        assert equal(v, w)
        assert v.letters[2] == w.letters[2]
    assert set(relation_moves(parse("s1 s2 x1", 3))) == {parse("x2 s1 s2", 3)}


def test_respell_preserves_element():
    rng = random.Random(4)
    for _ in range(100):
        w = random_word(rng.randint(2, 4), rng.randint(0, 8), rng)
        v = respell(w, rng, steps=6)
        assert burau(v) == burau(w)
        assert equal(v, w)


def test_respell_length_bound_and_positive_runs():
    rng = random.Random(2)
    w = parse("s1 x2 s1 s2", 3)
    for _ in range(50):
        v = respell(w, rng, steps=5, max_length=len(w))
        assert len(v) == len(w)
        assert all(l.kind is not Kind.SIGMA_INV for l in v.letters)
        assert positively_equal(v, w)
