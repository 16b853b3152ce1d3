import pytest

from vsgroups.iso import (
    AbelianEngine, IsoCertificate, Prover, ZxSnEngine, engine_for, fingerprint, format_certificate,
    free_product_presentation, parse_certificate, recognize_free_product, verify_iso, zxsn_presentation,
)
from vsgroups.presentations import build_presentation, custom
from vsgroups.targets import SymmetricGroup
from vsgroups.words import parse_abstract_word


def test_free_product_engine_decides_words():
    P = free_product_presentation("Z^2 * Z_2")
    eng = recognize_free_product(P)
    assert eng is not None
    w = lambda text: parse_abstract_word(text, P.generators)
    assert eng.decide(w("z1_1 z1_2 z1_1^-1 z1_2^-1"))
    assert eng.decide(w("z2_1^2"))
    assert not eng.decide(w("z1_1 z2_1 z1_1^-1 z2_1"))


def test_recognition_rejects_non_clique_commuting():
    P = custom(["a", "b", "c"], [("a b", "b a"), ("b c", "c b")])
    assert recognize_free_product(P) is None


def test_abelian_engine():
    P = custom(["a", "b"], [("a b", "b a"), "a^4"])
    eng = AbelianEngine(P)
    w = lambda text: parse_abstract_word(text, P.generators)
    assert eng.decide(w("a^8 b a^-4 b^-1"))
    assert not eng.decide(w("a^2"))


def test_zxsn_engine():
    P = zxsn_presentation(3)
    eng = ZxSnEngine(P, 3)
    w = lambda text: parse_abstract_word(text, P.generators)
    assert eng.decide(w("s1 s2 s1 s2^-1 s1^-1 s2^-1"))
    assert not eng.decide(w("t"))


def test_prover_proves_and_refutes():
    P = custom(["a", "b"], ["a^2", "b^3", "a b a b"])    # S_3
    prover = Prover(P, refuters=(SymmetricGroup(3),))
    w = lambda text: parse_abstract_word(text, P.generators)
    assert prover.decide(w("b a b a")) is True
    assert prover.decide(w("a b")) is False


def test_free_product_certificate_and_roundtrip():
    vsg2 = build_presentation("VSG", 2)
    Z = free_product_presentation("Z^2 * Z_2")
    cert = IsoCertificate(custom(["s1", "t1", "v1"], ["v1^2", ("s1 t1", "t1 s1")]), Z,
                          {"s1": "z1_1", "t1": "z1_2", "v1": "z2_1"}, {"z1_1": "s1", "z1_2": "t1", "z2_1": "v1"})
    assert verify_iso(cert).valid
    back = parse_certificate(format_certificate(cert))
    assert verify_iso(back).valid
    assert len(vsg2.relators) == 2


def test_bad_certificate_rejected():
    Z = free_product_presentation("Z^2 * Z_2")
    P = custom(["s1", "t1", "v1"], ["v1^2", ("s1 t1", "t1 s1")])
    cert = IsoCertificate(P, Z, {"s1": "z1_1", "t1": "z1_1", "v1": "z2_1"},
                          {"z1_1": "s1", "z1_2": "t1", "z2_1": "v1"})
    rep = verify_iso(cert)
    assert not rep.valid and rep.failures


def test_fingerprints_of_known_groups():
    assert fingerprint(free_product_presentation("Z^2 * Z")) == {"S3": 108, "S4": 2880}
    assert fingerprint(custom(["a"], [])) == {"S3": 6, "S4": 24}


def test_engine_selection():
    assert engine_for(zxsn_presentation(4)).name == "ZxSn"
    assert engine_for(free_product_presentation("Z * Z_2")).name == "free-product"
    assert engine_for(custom(["a", "b"], [("a b", "b a"), ("a^2 b", "b^3")])).name == "abelian"
    assert engine_for(custom(["a", "b"], ["a^2", "b^3", "a b a b"])).name == "prover"
