import random

from hypothesis import given, strategies as st

from vsgroups.freegroup import Automorphism, FreeGroupAutomorphism, aut_apply, aut_compose, basis, fw
from vsgroups.freeproduct import FreeProductGroup, fp_normalize, parse_factor_spec, standard_assignment
from vsgroups.targets import AbelianGroup, AutGroup, SymmetricGroup, ZxSn, closure, power
from vsgroups.words import Word

SPECS = ["Z^2 * Z_2", "Z^2 * Z", "F2 * Z_2 * Z_2", "Z_3 * Z_2"]


@given(st.sampled_from(SPECS), st.integers(0, 10_000))
def test_free_product_group_axioms(text, seed):
    rng = random.Random(seed)
    G = FreeProductGroup(parse_factor_spec(text))
    a, b, c = (G.random_element(rng) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity()


@given(st.sampled_from(SPECS), st.integers(0, 10_000))
def test_normal_form_of_words(text, seed):
    rng = random.Random(seed)
    spec = parse_factor_spec(text)
    asg = standard_assignment(spec)
    names = list(asg)
    w = Word.of([(rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))])
    x = fp_normalize(w, spec, asg)
    assert fp_normalize(w * ~w, spec, asg).syllables == ()
    G = FreeProductGroup(spec)
    assert G.mul(x, fp_normalize(~w, spec, asg)) == G.identity()
    # adjacent syllables lie in different factors
    ks = [k for k, _ in x.syllables]
    assert all(p != q for p, q in zip(ks, ks[1:]))


def test_torsion_reduces():
    spec = parse_factor_spec("Z^2 * Z_2")
    asg = standard_assignment(spec)
    assert fp_normalize(Word.of([("z2_1", 2)]), spec, asg).syllables == ()
    assert fp_normalize(Word.of([("z1_1", 1), ("z1_2", 1), ("z1_1", -1)]), spec, asg) == \
        fp_normalize(Word.of([("z1_2", 1)]), spec, asg)


def test_automorphism_composition_applies_first_then_second():
    B = basis(2)
    f = FreeGroupAutomorphism.from_map(B, {"x1": fw("x1", "x2")})
    g = FreeGroupAutomorphism.from_map(B, {"x2": fw("x2", "x1")})
    h = aut_compose(f, g)
    w = fw("x1", ("x2", -1))
    assert aut_apply(h, w) == aut_apply(g, aut_apply(f, w))


def test_aut_group_inverse():
    B = basis(2)
    f = FreeGroupAutomorphism.from_map(B, {"x1": fw("x1", "x2")})
    finv = FreeGroupAutomorphism.from_map(B, {"x1": fw("x1", ("x2", -1))})
    G = AutGroup(B)
    a = Automorphism(f, finv)
    assert G.eq(G.mul(a, G.inv(a)), G.identity())


def test_small_targets():
    S = SymmetricGroup(4)
    assert len(closure(S, [S.adjacent(1), S.adjacent(2), S.adjacent(3)])) == 24
    Z = ZxSn(3)
    x = Z.element(1, SymmetricGroup(3).adjacent(1))
    assert Z.eq(power(Z, x, 2), Z.element(2))
    A = AbelianGroup((0, 2))
    assert A.eq(power(A, (1, 1), 2), (2, 0))
