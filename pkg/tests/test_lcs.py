import pytest

from vsgroups.lcs import (
    AbelianInvariants, Class2, abelianization, class2_quotient, commutator_pairs, gamma2_mod_gamma3,
    parse_invariants,
)
from vsgroups.presentations import REGISTRY, build_presentation, custom


@pytest.mark.parametrize("n", range(2, 7))
def test_vsg_abelianization(n):
    assert str(abelianization(build_presentation("VSG", n))) == "Z^2 + Z_2"


@pytest.mark.parametrize("text", ["0", "Z", "Z^3 + Z_2 + Z_6", "Z_4"])
def test_invariants_roundtrip(text):
    assert str(parse_invariants(text)) == text


# small groups with known Gamma_2 / Gamma_3
KNOWN = [
    (["a", "b"], [], "Z"),                                       # free of rank 2
    (["a", "b", "c"], [], "Z^3"),
    (["a", "b"], [("a b", "b a")], "0"),                         # Z^2
    (["a", "b"], ["a^2", "b^2"], "Z_2"),                         # infinite dihedral
    (["a", "b"], [("a^2", "b^2"), ("a b a", "b")], "Z_2"),       # quaternion group
    (["a", "b"], ["a^3", "b^2", "a b a b"], "0"),                # S_3: Gamma_2 = Gamma_3
]


@pytest.mark.parametrize("gens,rels,want", KNOWN)
def test_class2_known_groups(gens, rels, want):
    q = class2_quotient(custom(gens, rels))
    assert q.consistent
    assert str(q.gamma2_mod_gamma3) == want


def test_vsg_class2():
    assert str(gamma2_mod_gamma3(build_presentation("VSG", 2))) == "Z_2 + Z_2"
    for n in (4, 5):
        assert gamma2_mod_gamma3(build_presentation("VSG", n)).is_trivial


def test_class2_arithmetic():
    N = Class2(3)
    x, y = N.gen(0), N.gen(1)
    assert N.mul(N.inv(x), x) == N.identity()
    comm = N.mul(N.mul(N.inv(x), N.inv(y)), N.mul(x, y))
    assert list(comm[0]) == [0, 0, 0] and sum(map(abs, comm[1])) == 1
    assert N.power(x, 3) == N.mul(x, N.mul(x, x))
    assert commutator_pairs(3) == [(1, 0), (2, 0), (2, 1)]


@pytest.mark.parametrize("family", REGISTRY)
def test_class2_abelianization_consistent(family):
    for n in range(2, 6):
        assert class2_quotient(build_presentation(family, n)).consistent
