import pytest
from hypothesis import given

from conftest import braid_words
from vsgroups.homs import (
    TRIPLES, HomError, classify_triples, count_homs, eval_hom, exponent_map, exponent_sums, format_triple,
    parse_triple, phi_triple, psi_map, verify_homomorphism,
)
from vsgroups.presentations import build_presentation, custom
from vsgroups.targets import SymmetricGroup, cyclic
from vsgroups.words import parse_word


def test_triple_codec():
    assert parse_triple("101") == (1, 0, 1)
    assert format_triple((0, 1, 1)) == "011"
    with pytest.raises(ValueError):
        parse_triple("12")


def test_exp_example():
    assert str(exponent_sums(parse_word("s1 t2^-1 v1", 3))) == "expC=1 expS=-1 expCS=0 parity=1"


@given(braid_words(n=4), braid_words(n=4))
def test_exp_is_additive(a, b):
    x, y, z = exponent_sums(a), exponent_sums(b), exponent_sums(a * b)
    assert z.exp_c == x.exp_c + y.exp_c and z.exp_s == x.exp_s + y.exp_s
    assert z.parity == (x.parity + y.parity) % 2


@given(braid_words(n=4))
def test_exponent_maps_agree_with_sums(w):
    d = exponent_sums(w)
    assert eval_hom(exponent_map("C", 4), w) == (d.exp_c,)
    assert eval_hom(exponent_map("S", 4), w) == (d.exp_s,)
    assert eval_hom(exponent_map("CS", 4), w) == (d.exp_cs,)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vsg_triples(n):
    assert {format_triple(x) for x in classify_triples("VSG", n)} == {"000", "001", "101", "111"}


def test_classify_needs_three_strands():
    with pytest.raises(HomError):
        classify_triples("VSG", 2)


def test_all_triples_at_two_strands():
    P = build_presentation("VSG", 2)
    assert all(verify_homomorphism(phi_triple(P, 2, *x)) for x in TRIPLES)


def test_failure_report_names_relators():
    rep = verify_homomorphism(phi_triple("VSG", 3, 0, 1, 1))
    assert not rep.is_homomorphism and rep.failures
    assert verify_homomorphism(phi_triple("VSG", 3, 0, 1, 1), stop_at_first=True).failures.__len__() == 1


@pytest.mark.parametrize("family", ["VSG", "FCVSG", "GCVSG"])
def test_psi_is_homomorphism(family):
    assert verify_homomorphism(psi_map(4, family))


@pytest.mark.parametrize("family", ["WCSG", "UVSG"])
def test_psi_fails_once_q1_holds(family):
    # v_i s_{i+1} s_i = s_{i+1} s_i v_{i+1} would force adjacent transpositions to agree
    assert not verify_homomorphism(psi_map(4, family))


@pytest.mark.parametrize("family", ["VSG", "WCSG", "UVSG", "FWSG", "GCVSG"])
def test_exp_s_is_homomorphism(family):
    assert verify_homomorphism(exponent_map("S", 4, family))


def test_flat_families_kill_exp_c():
    # sigma_i^2 = 1 forbids a map to Z counting classical letters
    assert not verify_homomorphism(exponent_map("C", 3, "FCVSG"))


def test_hom_counts():
    Z2 = custom(["a"], ["a^2"])
    assert count_homs(Z2, SymmetricGroup(3)) == 4
    assert count_homs(custom(["a", "b"], []), SymmetricGroup(3)) == 36
    assert count_homs(custom(["a", "b"], [("a b", "b a")]), SymmetricGroup(3)) == 18
    assert count_homs(custom(["a"], []), cyclic(5)) == 5
