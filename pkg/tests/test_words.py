import pytest
from hypothesis import given, strategies as st

from conftest import braid_words
from vsgroups.words import (
    WordError, cyclic_reduce, cyclic_rotations, format_word, free_reduce, parse_word, s, t, v, word,
)


def test_parse_and_format():
    w = parse_word("s1 t2^-1 v1 v1", 3)
    assert format_word(w) == "s1 t2^-1 v1^2"
    assert len(w) == 4
    assert parse_word("e", 3).letters == ()


def test_free_reduction_on_construction():
    assert format_word(parse_word("s1 s1^-1 t2", 3)) == "t2"
    assert word(s(1), (s(1), -1), strands=2).letters == ()


@pytest.mark.parametrize("text", ["s3", "x1", "s1^0", "s1^", "q"])
def test_rejects_bad_input(text):
    with pytest.raises(WordError):
        parse_word(text, 3)


@given(braid_words())
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w), w.strands) == w


@given(braid_words(), braid_words(n=5))
def test_inverse(w, _):
    assert (w * ~w).letters == ()
    assert ~~w == w


@given(braid_words())
def test_cyclic_reduce_is_conjugate_and_short(w):
    c = cyclic_reduce(w)
    assert len(c) <= len(w)
    if c.letters:
        assert c.letters[0][0] != c.letters[-1][0] or len(c.letters) == 1
    for r in cyclic_rotations(c):
        assert len(r) == len(c)


def test_power():
    w = word(s(1), v(1), strands=2)
    assert format_word(w ** 3) == "s1 v1 s1 v1 s1 v1"
    assert format_word(w ** -1) == "v1^-1 s1^-1"
    assert free_reduce(w ** 2 * w ** -2).letters == ()
