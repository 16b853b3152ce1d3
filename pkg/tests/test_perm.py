import itertools

from hypothesis import given, strategies as st

from vsgroups.perm import Permutation, adjacent_word, all_permutations, from_cycles, parse_perm, transposition

perms = st.integers(1, 6).flatmap(lambda m: st.permutations(range(1, m + 1))).map(lambda p: Permutation(tuple(p)))


def test_compose_left_to_right():
    a, b = transposition(1, 2, 3), transposition(2, 3, 3)
    # a then b: 1 -> 2 -> 3
    assert (a * b)(1) == 3


@given(perms)
def test_inverse_and_identity(p):
    assert (p * p.inverse()).is_identity()
    assert p ** 0 == Permutation.identity(p.degree)


@given(perms)
def test_adjacent_word_is_reduced(p):
    w = adjacent_word(p)
    assert len(w) == p.inversions()
    q = Permutation.identity(p.degree)
    for i in w:
        q = q * transposition(i, i + 1, p.degree)
    assert q == p


def test_counts_and_parsing():
    assert len(all_permutations(4)) == 24
    assert len({p.sign() for p in all_permutations(3)}) == 2
    assert parse_perm("(1 2)(3 4)", 4) == from_cycles([(1, 2), (3, 4)], 4)
    assert from_cycles([(1, 3, 2)], 3).cycle_str() == "(1 3 2)"
