import pytest

from vsgroups.homs import phi_triple, verify_homomorphism
from vsgroups.outer import certify_outer, coxeter_ok, nu6_compose, outer_automorphism_s6
from vsgroups.perm import all_permutations, parse_perm, transposition


def test_fixture_images():
    nu = outer_automorphism_s6()
    want = ["(1 2)(3 4)(5 6)", "(1 3)(2 5)(4 6)", "(1 2)(3 6)(4 5)", "(1 3)(2 4)(5 6)", "(1 2)(3 5)(4 6)"]
    assert [p.cycle_str() for p in nu.images] == want


def test_certificate():
    c = certify_outer()
    assert c.fixed_point_free and c.relations_hold
    assert c.is_automorphism and c.is_outer and c.square_is_inner


def test_maps_transpositions_to_triple_transpositions():
    nu = outer_automorphism_s6()
    for i in range(1, 6):
        for j in range(i + 1, 7):
            assert nu(transposition(i, j, 6)).cycle_type() == (2, 2, 2)


def test_is_multiplicative():
    nu = outer_automorphism_s6()
    ps = all_permutations(6)[::37]
    for p in ps:
        for q in ps:
            assert nu(p * q) == nu(p) * nu(q)


@pytest.mark.parametrize("triple", [(1, 1, 1), (1, 0, 1), (0, 0, 1)])
def test_twisted_maps(triple):
    assert verify_homomorphism(nu6_compose(phi_triple("VSG", 6, *triple)))


def test_coxeter_check():
    assert coxeter_ok([transposition(1, 2, 6), transposition(2, 3, 6)])
    assert not coxeter_ok([transposition(1, 2, 6), transposition(3, 4, 6)])
