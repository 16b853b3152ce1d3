"""
Semidirect decompositions, purity, free-group representations and separation
of forbidden relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .freegroup import Automorphism, FreeGroupAutomorphism, basis, fw
from .freeproduct import FreeProductElement, parse_factor_spec
from .homs import (
    GeneratorMap, HomError, eval_hom, phi_triple, psi_map, search_separating_quotient, verify_homomorphism,
)
from .iso import FreeProductEngine
from .perm import Permutation, adjacent_word, perm_from_word
from .presentations import Relator, build_presentation, quotient_relators, relation
from .targets import AutGroup, SymmetricGroup, render
from .words import Family, Gen, Word, free_reduce, s, t, v

SEMIDIRECT_TRIPLES = ((1, 1, 1), (1, 0, 1), (0, 0, 1))


def section(p: Permutation) -> Word:
    """v-word of length inv(p) whose permutation image is p."""
    return Word.of([(v(i), 1) for i in adjacent_word(p)], p.degree)


@dataclass(frozen=True)
class DecompositionResult:
    pure: Word
    perm: Permutation
    triple: tuple[int, int, int]
    section_word: Word

    def recompose(self) -> Word:
        return self.pure * self.section_word


def decompose(w: Word, triple=(1, 1, 1), n: int | None = None) -> DecompositionResult:
    triple = tuple(triple)
    if triple not in SEMIDIRECT_TRIPLES:
        raise HomError(f"{triple} does not give a semidirect decomposition")
    n = n or w.strands
    m = phi_triple("VSG", n, *triple)
    perm = eval_hom(m, w)
    sec = section(perm)
    pure = free_reduce(w * ~sec)
    return DecompositionResult(pure, perm, triple, sec)


def is_pure(w: Word, triple=(1, 1, 1), family: str = "VSG", n: int | None = None) -> bool:
    n = n or w.strands
    m = phi_triple(family, n, *triple)
    if not verify_homomorphism(m, stop_at_first=True):
        raise HomError(f"phi_{''.join(map(str, triple))} is not a homomorphism on {family}_{n}")
    return eval_hom(m, w).is_identity()


# VSG_2 normal form ---------------------------------------------------------------

@lru_cache(maxsize=1)
def vsg2_engine() -> FreeProductEngine:
    """VSG_2 read as Z^2 * Z_2 with s1, t1 in the first factor and v1 in the second."""
    return FreeProductEngine(build_presentation("VSG", 2), parse_factor_spec("Z^2 * Z_2"), [s(1), t(1), v(1)])


def nf2(w: Word) -> FreeProductElement:
    return vsg2_engine().normal_form(w)


def format_nf2(x: FreeProductElement) -> str:
    """Normal form written back as a VSG_2 word."""
    parts = []
    for k, val in x.syllables:
        if k == 0:
            parts += [f"s1^{val[0]}" if val[0] != 1 else "s1"] * bool(val[0])
            parts += [f"t1^{val[1]}" if val[1] != 1 else "t1"] * bool(val[1])
        else:
            parts.append("v1")
    return " ".join(parts) or "e"


# representations ---------------------------------------------------------------

def _aut(images: dict[str, Word], inverse: dict[str, Word], B) -> Automorphism:
    return Automorphism(FreeGroupAutomorphism.from_map(B, images), FreeGroupAutomorphism.from_map(B, inverse))


def _sigma(i: int, B) -> Automorphism:
    x, y = f"x{i}", f"x{i + 1}"
    return _aut({x: fw(x, y, (x, -1)), y: fw(x)}, {x: fw(y), y: fw((y, -1), x, y)}, B)


def _swap(i: int, B) -> Automorphism:
    x, y = f"x{i}", f"x{i + 1}"
    return _aut({x: fw(y), y: fw(x)}, {x: fw(y), y: fw(x)}, B)


def _ext_v(i: int, B) -> Automorphism:
    x, z = f"x{i}", f"x{i + 1}"
    img = {x: fw("y", z, ("y", -1)), z: fw(("y", -1), x, "y")}
    return _aut(img, img, B)


REPRESENTATIONS = ("welded", "extended")


def builtin_representation(name: str, n: int, family: str = "VB") -> GeneratorMap:
    """
    welded: Aut(F_n), sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, v_i swaps.
    extended: Aut(F_{n+1}) with extra basis letter y, v_i: x_i -> y x_{i+1} y^-1, x_{i+1} -> y^-1 x_i y.
    Singular generators (if present in ``family``) go to the identity.
    """
    if name not in REPRESENTATIONS:
        raise ValueError(f"unknown representation {name!r}")
    B = basis(n, ("y",) if name == "extended" else ())
    G = AutGroup(B)
    P = build_presentation(family, n)
    images = {}
    for g in P.generators:
        if g.family == Family.CLASSICAL:
            images[g] = _sigma(g.index, B)
        elif g.family == Family.VIRTUAL:
            images[g] = _swap(g.index, B) if name == "welded" else _ext_v(g.index, B)
        else:
            images[g] = G.identity()
    return GeneratorMap(P, G, images, name)


def representation_domain(name: str, n: int):
    """Presentation the representation is checked against before use."""
    P = build_presentation("VB", n)
    if name == "welded":
        P = P.with_relators(quotient_relators("Q1", n), "VB+Q1")
    return P


# forbidden relations -------------------------------------------------------------

def forbidden_relation(rel_id: int, i: int, n: int) -> tuple[Word, Word]:
    a, b = i, i + 1
    lhs, rhs = {
        1: ([v(a), s(b), s(a)], [s(b), s(a), v(b)]),
        2: ([v(b), s(a), s(b)], [s(a), s(b), v(a)]),
        3: ([v(a), t(b), t(a)], [t(b), t(a), v(b)]),
        4: ([v(b), t(a), t(b)], [t(a), t(b), v(a)]),
    }[rel_id]
    return Word.of([(x, 1) for x in lhs], n), Word.of([(x, 1) for x in rhs], n)


@dataclass
class ForbiddenReport:
    relation: int
    index: int
    n: int
    separator: str            # ZxSn | AutRep:<name> | QuotientSearch
    lhs_image: str
    rhs_image: str
    separated: bool

    def row(self) -> str:
        return (f"relation={self.relation} i={self.index} separator={self.separator} "
                f"lhs={self.lhs_image} rhs={self.rhs_image} separated={str(self.separated).lower()}")


def _rep_on_vsg(name: str, n: int) -> GeneratorMap | None:
    """The representation precomposed with tau -> 1, after checking it on its own domain."""
    rep = builtin_representation(name, n, "VB")
    dom = GeneratorMap(representation_domain(name, n), rep.target, rep.images, name)
    if not verify_homomorphism(dom):
        return None
    m = builtin_representation(name, n, "VSG")
    return m if verify_homomorphism(m) else None


def forbidden_check(n: int, rel_id: int, i: int, quotient_targets=None) -> ForbiddenReport:
    if n < 3 or not 1 <= i <= n - 2 or rel_id not in (1, 2, 3, 4):
        raise ValueError(f"invalid forbidden-relation query n={n} relation={rel_id} i={i}")
    lhs, rhs = forbidden_relation(rel_id, i, n)
    strategies = []
    if rel_id in (3, 4):
        strategies.append(("ZxSn", lambda: psi_map(n)))
    else:
        rep = "extended" if rel_id == 1 else "welded"
        strategies.append((f"AutRep:{rep}", lambda: _rep_on_vsg(rep, n)))
    for label, make in strategies:
        m = make()
        if m is None or not verify_homomorphism(m):
            continue
        a, b = eval_hom(m, lhs), eval_hom(m, rhs)
        if not m.target.eq(a, b):
            return ForbiddenReport(rel_id, i, n, label, render(m.target, a), render(m.target, b), True)
    P = build_presentation("VSG", n)
    targets = quotient_targets or [SymmetricGroup(k) for k in range(3, 5)]
    found = search_separating_quotient(P, lhs, rhs, targets)
    if found:
        m, (a, b) = found
        return ForbiddenReport(rel_id, i, n, "QuotientSearch", render(m.target, a), render(m.target, b), True)
    return ForbiddenReport(rel_id, i, n, "none", "", "", False)
