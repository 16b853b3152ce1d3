import random

import pytest
from hypothesis import given, strategies as st

from vsgroups.homs import exponent_sums
from vsgroups.presentations import (
    QUOTIENTS, REGISTRY, PresentationError, apply_relation, build_presentation, custom, format_presentation,
    parse_presentation, quotient_relators, random_word, relator_count,
)
from vsgroups.words import cyclic_reduce


@pytest.mark.parametrize("family", REGISTRY)
@pytest.mark.parametrize("n", range(2, 9))
def test_census(family, n):
    assert len(build_presentation(family, n).relators) == relator_count(family, n)


def test_vsg_census_formula():
    for n in range(3, 9):
        assert relator_count("VSG", n) == 2 * (n - 1) + 6 * (n - 2) + 9 * (n - 2) * (n - 3) // 2


@pytest.mark.parametrize("family", REGISTRY)
def test_relators_cyclically_reduced_and_sided(family):
    P = build_presentation(family, 4)
    for r in P.relators:
        assert cyclic_reduce(r.word) == r.word
        lhs, rhs = r.sides()
        assert cyclic_reduce(lhs * ~rhs) == r.word or len(lhs * ~rhs) >= len(r.word)


def test_quotients_extend_vsg():
    base = set(build_presentation("VSG", 4).relators)
    for fam in QUOTIENTS:
        assert base <= set(build_presentation(fam, 4).relators)


def test_unknown_family():
    with pytest.raises(PresentationError):
        build_presentation("XYZ", 3)


@pytest.mark.parametrize("family", ["VSG", "UVSG", "GCVSG", "B"])
def test_text_roundtrip(family):
    P = build_presentation(family, 4)
    Q = parse_presentation(format_presentation(P))
    assert [r.word for r in Q.relators] == [r.word for r in P.relators]


def test_custom_roundtrip():
    P = custom(["a", "b"], [("a b", "b a"), "a^2"], name="test")
    Q = parse_presentation(format_presentation(P))
    assert [str(g) for g in Q.generators] == ["a", "b"]
    assert [r.word for r in Q.relators] == [r.word for r in P.relators]


@given(st.integers(0, 10_000))
def test_relation_moves_keep_exponent_sums_in_vsg(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 5)
    P = build_presentation("VSG", n)
    w = random_word(P.generators, rng.randint(0, 15), rng, n)
    r = rng.choice(P.relators)
    w2 = apply_relation(w, r, rng.randint(0, len(w)), rng.choice((1, -1)), rng.randrange(len(r.word)))
    assert exponent_sums(w2) == exponent_sums(w)


def test_flat_relator_shifts_classical_sum():
    # sigma_i^2 = 1 changes the classical exponent sum by two; only its parity survives
    r = quotient_relators("Q5", 3)[0]
    w = apply_relation(build_presentation("VSG", 3).word("s1"), r, 0)
    d0, d1 = exponent_sums(build_presentation("VSG", 3).word("s1")), exponent_sums(w)
    assert abs(d1.exp_c - d0.exp_c) == 2 and d1.exp_s == d0.exp_s and d1.parity == d0.parity
