import random

import pytest
from hypothesis import given, strategies as st

from conftest import braid_words
from vsgroups.homs import GeneratorMap, HomError, eval_hom, phi_triple, verify_homomorphism
from vsgroups.perm import all_permutations
from vsgroups.presentations import apply_relation, build_presentation, random_word
from vsgroups.structure import (
    SEMIDIRECT_TRIPLES, builtin_representation, decompose, forbidden_check, format_nf2, is_pure, nf2,
    representation_domain, section,
)
from vsgroups.words import parse_word


@given(st.sampled_from(SEMIDIRECT_TRIPLES), braid_words(max_len=20))
def test_decomposition_recomposes(triple, w):
    r = decompose(w, triple)
    assert r.recompose() == w
    assert is_pure(r.pure, triple)
    assert eval_hom(phi_triple("VSG", w.strands, *triple), r.section_word) == r.perm


def test_decompose_rejects_other_triples():
    with pytest.raises(HomError):
        decompose(parse_word("s1", 3), (1, 1, 0))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_section_is_a_section(m):
    for p in all_permutations(m):
        w = section(p)
        assert len(w) == p.inversions()
        assert eval_hom(phi_triple("VSG", m, 0, 0, 1), w) == p


@given(braid_words(n=2, max_len=15), braid_words(n=2, max_len=15))
def test_nf2_is_multiplicative(a, b):
    assert nf2(a * b) == nf2(parse_word(format_nf2(nf2(a)), 2) * parse_word(format_nf2(nf2(b)), 2))
    assert nf2(a * ~a).syllables == ()


def test_nf2_examples():
    assert format_nf2(nf2(parse_word("v1 s1 v1 v1 t1 s1^-1", 2))) == "v1 t1"
    assert format_nf2(nf2(parse_word("t1 s1 t1^-1", 2))) == "s1"
    assert format_nf2(nf2(parse_word("v1 v1", 2))) == "e"


@pytest.mark.parametrize("name", ["welded", "extended"])
@pytest.mark.parametrize("n", [3, 4])
def test_representations_on_their_domains(name, n):
    m = builtin_representation(name, n, "VB")
    assert verify_homomorphism(GeneratorMap(representation_domain(name, n), m.target, m.images))
    assert verify_homomorphism(builtin_representation(name, n, "VSG"))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_forbidden_relations_separated(n):
    for i in range(1, n - 1):
        for rel in (1, 2, 3, 4):
            rep = forbidden_check(n, rel, i)
            assert rep.separated, rep.row()
            assert rep.separator != "QuotientSearch"


def test_forbidden_row_format():
    row = forbidden_check(3, 3, 1).row()
    assert row == "relation=3 i=1 separator=ZxSn lhs=(2, (1 2)) rhs=(2, (2 3)) separated=true"


def test_normal_form_invariant_under_relator_moves():
    rng = random.Random(99)
    P = build_presentation("VSG", 2)
    for _ in range(10_000):
        w = random_word(P.generators, rng.randint(0, 12), rng, 2)
        r = rng.choice(P.relators)
        w2 = apply_relation(w, r, rng.randint(0, len(w)), rng.choice((1, -1)), rng.randrange(len(r.word)))
        assert nf2(w2) == nf2(w)
