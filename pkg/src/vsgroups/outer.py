"""
A fixed representative of the exceptional outer automorphism class of S_6.

The images of the adjacent transpositions are found by an ordered search over
fixed-point-free involutions subject to the Coxeter relations, so the fixture
is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .homs import GeneratorMap
from .perm import Permutation, adjacent_word, all_permutations, transposition
from .presentations import build_presentation
from .targets import SymmetricGroup, closure


def _order(p: Permutation) -> int:
    k, q = 1, p
    while not q.is_identity():
        q, k = q * p, k + 1
    return k


@dataclass(frozen=True)
class OuterAutomorphism:
    images: tuple[Permutation, ...]        # images of (1 2), ..., (5 6)

    def __call__(self, p: Permutation) -> Permutation:
        out = Permutation.identity(6)
        for i in adjacent_word(p):
            out = out * self.images[i - 1]
        return out

    def compose(self, other: "OuterAutomorphism") -> "OuterAutomorphism":
        """self then other."""
        return OuterAutomorphism(tuple(other(x) for x in self.images))


def coxeter_ok(imgs: list[Permutation]) -> bool:
    k = len(imgs)
    x = imgs[-1]
    if _order(x) != 2:
        return False
    for j in range(k - 1):
        want = 3 if j == k - 2 else 2
        if _order(imgs[j] * x) != want:
            return False
    return True


def find_conjugator(src: tuple[Permutation, ...], dst: tuple[Permutation, ...]) -> Permutation | None:
    """Some c with c^-1 src_i c = dst_i for all i, by exhausting S_6."""
    for c in all_permutations(6):
        ci = c.inverse()
        if all(ci * a * c == b for a, b in zip(src, dst)):
            return c
    return None


@lru_cache(maxsize=1)
def outer_automorphism_s6() -> OuterAutomorphism:
    invs = [p for p in all_permutations(6) if p.cycle_type() == (2, 2, 2)]

    def dfs(acc):
        if len(acc) == 5:
            return acc
        for p in invs:
            if coxeter_ok(acc + [p]):
                found = dfs(acc + [p])
                if found:
                    return found
        return None

    imgs = dfs([])
    if imgs is None:
        raise RuntimeError("no (2,2,2) Coxeter system found")
    return OuterAutomorphism(tuple(imgs))


@dataclass
class OuterCertificate:
    images: tuple[Permutation, ...]
    fixed_point_free: bool
    relations_hold: bool
    image_order: int
    inner_conjugator: Permutation | None
    square_conjugator: Permutation | None

    @property
    def is_automorphism(self) -> bool:
        return self.relations_hold and self.image_order == 720

    @property
    def is_outer(self) -> bool:
        return self.is_automorphism and self.inner_conjugator is None

    @property
    def square_is_inner(self) -> bool:
        return self.square_conjugator is not None


def certify_outer(nu: OuterAutomorphism | None = None) -> OuterCertificate:
    nu = nu or outer_automorphism_s6()
    S = SymmetricGroup(6)
    imgs = list(nu.images)
    rel = all(coxeter_ok(imgs[:k]) for k in range(1, 6))
    order = len(closure(S, imgs))
    gens = tuple(transposition(i, i + 1, 6) for i in range(1, 6))
    sq = nu.compose(nu)
    return OuterCertificate(nu.images, all(p.cycle_type() == (2, 2, 2) for p in imgs), rel, order,
                            find_conjugator(gens, nu.images), find_conjugator(gens, sq.images))


def nu6_compose(m: GeneratorMap, nu: OuterAutomorphism | None = None) -> GeneratorMap:
    nu = nu or outer_automorphism_s6()
    return m.then(nu, name=f"nu6.{m.name}")
