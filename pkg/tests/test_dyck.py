import random

import pytest
from hypothesis import given, strategies as st

from dyckperm import (
    DyckPath,
    Pairing,
    catalan,
    down_positions,
    enumerate_paths,
    height,
    is_noncrossing,
    parse_word,
    path_from_tunneling,
    tunneling,
    up_positions,
)
from dyckperm import errors
from dyckperm.dyck import Block, heights, iter_words, wrap
from oracles import crossing_free, match_by_first_return, random_pairing, random_word


@st.composite
def words(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    return random_word(n, random.Random(draw(st.integers(0, 2**32))))


def test_parse_examples():
    p = parse_word("uuduuddd")
    assert p.n == 4 and list(p.word) == list("uuduuddd")
    assert parse_word("ud").n == 1
    assert parse_word(" (()) \n").word == "uudd"


@pytest.mark.parametrize(
    "text, exc",
    [
        ("duud", errors.PrefixViolation),
        ("uxd", errors.NonAlphabet),
        ("uud", errors.OddLength),
        ("uuuudd", errors.Unbalanced),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_word(text)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        DyckPath("dudu")


@pytest.mark.parametrize(
    "word, expected",
    [("uuduuddd", "8,3,2,7,6,5,4,1"), ("ud", "2,1"), ("uududd", "6,3,2,5,4,1")],
)
def test_tunneling(word, expected):
    assert str(tunneling(DyckPath(word))) == expected


@pytest.mark.parametrize(
    "partner, expected",
    [((2, 1, 4, 3, 6, 5), True), ((5, 6, 4, 3, 1, 2), False), ((2, 1), True)],
)
def test_is_noncrossing(partner, expected):
    assert is_noncrossing(Pairing(partner)) is expected
    assert crossing_free(partner) is expected


@pytest.mark.parametrize(
    "partner, word",
    [((2, 1, 4, 3, 6, 5), "ududud"), ((2, 1), "ud"), ((8, 3, 2, 7, 6, 5, 4, 1), "uuduuddd")],
)
def test_path_from_tunneling(partner, word):
    assert path_from_tunneling(Pairing(partner)).word == word


def test_path_from_crossing_pairing():
    with pytest.raises(errors.CrossingPairing):
        path_from_tunneling(Pairing((5, 6, 4, 3, 1, 2)))


@pytest.mark.parametrize("partner", [(1, 2), (2, 3, 1), (2, 1, 3)])
def test_invalid_pairing(partner):
    with pytest.raises(errors.InvalidPairing):
        Pairing(partner)


def test_height():
    p = DyckPath("uuduuddd")
    assert height(p, 5) == 3
    assert height(p, 7) == 1
    assert height(p, 0) == height(p, 8) == 0
    with pytest.raises(errors.IndexOutOfRange):
        height(p, 9)


def test_enumerate_paths():
    assert [p.word for p in enumerate_paths(3)] == ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
    assert [p.word for p in enumerate_paths(1)] == ["ud"]
    assert len(list(enumerate_paths(4))) == 14
    with pytest.raises(errors.CapExceeded):
        list(enumerate_paths(13))


def test_cap_override():
    with pytest.raises(errors.CapExceeded):
        list(enumerate_paths(4, cap=3))


@pytest.mark.parametrize("n, value", [(3, 5), (0, 1), (10, 16796)])
def test_catalan(n, value):
    assert catalan(n) == value


def test_positions():
    assert up_positions(DyckPath("uududd")) == (1, 2, 4)
    assert down_positions(DyckPath("ud")) == (2,)
    assert up_positions(DyckPath("uuuddd")) == (1, 2, 3)


@pytest.mark.parametrize("n", range(0, 11))
def test_count_is_catalan(n):
    words_n = list(iter_words(n))
    assert len(words_n) == catalan(n)
    assert len(set(words_n)) == len(words_n)


def test_enumeration_order_up_before_down():
    key = lambda w: w.replace("u", "0").replace("d", "1")
    ws = list(iter_words(5))
    assert ws == sorted(ws, key=key)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_exhaustive(n):
    for w in iter_words(n):
        p = DyckPath(w)
        t = tunneling(p)
        assert path_from_tunneling(t) == p
        assert t.partner == match_by_first_return(w)
        assert is_noncrossing(t)


@given(words())
def test_tunnel_pairs(word):
    p = DyckPath(word)
    for k, l in tunneling(p).chords():
        assert p.step(k) == "u" and p.step(l) == "d"
        assert (l - k) % 2 == 1


@given(words())
def test_heights(word):
    p = DyckPath(word)
    hs = heights(p)
    assert min(hs) == 0 and hs[-1] == 0
    partner = p.partners
    for k in range(len(word) + 1):
        unmatched = sum(1 for i in range(1, k + 1) if partner[i - 1] > k)
        assert hs[k] == unmatched == height(p, k)


@given(st.integers(1, 8), st.integers(0, 2**32))
def test_noncrossing_vs_chord_oracle(n, seed):
    partner = random_pairing(2 * n, random.Random(seed))
    t = Pairing(partner)
    assert is_noncrossing(t) == crossing_free(partner)
    if is_noncrossing(t):
        assert tunneling(path_from_tunneling(t)) == t


def test_block():
    b = Block(5, 3, 6)
    assert b.members() == (5, 6, 1)
    assert 1 in b and 2 not in b
    assert wrap(0, 6) == 6 and wrap(7, 6) == 1
