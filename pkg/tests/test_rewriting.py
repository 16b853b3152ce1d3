"""Reidemeister-Schreier rewriting and Tietze simplification."""

import random

import pytest
from hypothesis import given, strategies as st

from vsgroups.homs import TRIPLES, eval_hom, phi_triple
from vsgroups.iso import fingerprint
from vsgroups.lcs import abelianization
from vsgroups.presentations import build_presentation, custom, random_word
from vsgroups.schreier import coset_table_from_hom, preference_order, rewrite_relators, rewrite_word, schreier_generators
from vsgroups.tietze import replay, tietze_simplify
from vsgroups.words import Word, free_reduce, s, t, v


def expand(w: Word, defs, strands):
    out = Word((), strands)
    for sym, e in w:
        out = out * (defs[sym] ** e)
    return out


@pytest.mark.parametrize("triple", TRIPLES)
def test_index_and_generator_count(triple):
    P = build_presentation("VSG", 2)
    tab = coset_table_from_hom(phi_triple(P, 2, *triple))
    sg = schreier_generators(tab, P)
    index = len(tab)
    assert index == (2 if any(triple) else 1)
    live = [g for g in sg if not g.removable]
    # Schreier index formula: rank = index * (gens - 1) + 1 for the free cover
    assert len(live) == index * (len(P.generators) - 1) + 1


def test_transversal_prefers_virtual():
    assert preference_order([s(1), t(1), v(1)]) == [v(1), s(1), t(1)]
    tab = coset_table_from_hom(phi_triple("VSG", 2, 1, 1, 1))
    assert [str(w) for w in tab.transversal] == ["e", "v1"]


@given(st.sampled_from([x for x in TRIPLES if any(x)]), st.integers(0, 10_000))
def test_rewrite_then_expand_recovers_kernel_words(triple, seed):
    rng = random.Random(seed)
    n = rng.choice((2, 3)) if triple in ((1, 1, 1), (1, 0, 1), (0, 0, 1)) else 2
    P = build_presentation("VSG", n)
    m = phi_triple(P, n, *triple)
    tab = coset_table_from_hom(m)
    sg = schreier_generators(tab, P)
    defs = {g.name: g.word for g in sg}
    w = random_word(P.generators, rng.randint(0, 12), rng, n)
    lam = tab.transversal[tab.coset_of(w)]
    k = free_reduce(w * ~lam)          # lies in the kernel
    assert eval_hom(m, k).is_identity()
    assert expand(rewrite_word(tab, sg, k), defs, n) == k


def test_rewritten_relators_lie_in_kernel():
    P = build_presentation("VSG", 3)
    m = phi_triple(P, 3, 1, 0, 1)
    rw = rewrite_relators(coset_table_from_hom(m), P)
    assert len(rw.relators) == 6 * len(P.relators)
    defs = rw.definitions()
    for (r, c), w in zip(rw.sources, rw.relators):
        lam = rw.table.transversal[c]
        assert expand(w, defs, 3) == free_reduce(lam * r.word * ~lam)


RANDOM_GROUPS = [
    (["a", "b", "c"], [("a b", "c"), "a^2", ("b c", "c b")]),
    (["a", "b", "c", "d"], [("a", "b c"), ("c d", "d c"), "b^3", ("d", "a b")]),
    (["x", "y", "z"], [("x y x", "y x y"), ("z", "x y")]),
]


@pytest.mark.parametrize("gens,rels", RANDOM_GROUPS)
def test_tietze_preserves_invariants(gens, rels):
    P = custom(gens, rels)
    Q, trace = tietze_simplify(P)
    assert len(Q.generators) <= len(P.generators)
    assert abelianization(Q) == abelianization(P)
    assert fingerprint(Q, ("S3",)) == fingerprint(P, ("S3",))
    R = replay(P, trace)
    assert [r.word for r in R.relators] == [r.word for r in Q.relators]


def test_tietze_respects_keep():
    P = custom(["a", "b"], [("a", "b^2")])
    Q, _ = tietze_simplify(P, keep=["a"])
    assert "a" in [str(g) for g in Q.generators]
    Q2, _ = tietze_simplify(P, keep=["a", "b"])
    assert len(Q2.generators) == 2


@given(st.integers(0, 10_000))
def test_tietze_on_random_presentations(seed):
    rng = random.Random(seed)
    gens = ["a", "b", "c"]
    rels = [" ".join(f"{rng.choice(gens)}^{rng.choice((1, -1))}" for _ in range(rng.randint(1, 5)))
            for _ in range(rng.randint(1, 3))]
    P = custom(gens, rels)
    Q, trace = tietze_simplify(P)
    assert abelianization(Q) == abelianization(P)
    assert fingerprint(Q, ("S3",)) == fingerprint(P, ("S3",))
