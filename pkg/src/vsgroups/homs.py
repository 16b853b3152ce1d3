"""
Homomorphisms out of presented groups: evaluation, relator-by-relator verification,
the phi-triple family, exponent sums, and homomorphism counting into small finite groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from .perm import Permutation
from .presentations import Presentation, Relator, build_presentation
from .targets import AbelianGroup, FiniteGroup, SymmetricGroup, ZxSn, integers, power, render
from .words import Family, Gen, Symbol, Word

TRIPLES = tuple(itertools.product((0, 1), repeat=3))


class HomError(ValueError):
    pass


@dataclass
class GeneratorMap:
    source: Presentation
    target: Any
    images: dict[Symbol, Any]
    name: str = ""

    def __post_init__(self):
        missing = [g for g in self.source.generators if g not in self.images]
        if missing:
            raise HomError(f"no image for generators {missing}")

    def __call__(self, w: Word):
        return eval_hom(self, w)

    def then(self, f, name: str = "", target=None) -> "GeneratorMap":
        """Post-compose the images with a function on target elements."""
        return GeneratorMap(self.source, target or self.target,
                            {g: f(x) for g, x in self.images.items()}, name or self.name)

    def describe(self) -> list[str]:
        return [f"{g} -> {render(self.target, x)}" for g, x in self.images.items()]


def eval_hom(m: GeneratorMap, w: Word):
    G = m.target
    out = G.identity()
    for sym, e in w:
        if sym not in m.images:
            raise HomError(f"unknown generator {sym}")
        out = G.mul(out, power(G, m.images[sym], e))
    return out


@dataclass
class HomReport:
    is_homomorphism: bool
    failures: list[tuple[Relator, Any, Any]] = field(default_factory=list)

    def __bool__(self):
        return self.is_homomorphism


def verify_homomorphism(m: GeneratorMap, stop_at_first: bool = False) -> HomReport:
    failures = []
    for r in m.source.relators:
        lhs, rhs = r.sides()
        a, b = eval_hom(m, lhs), eval_hom(m, rhs)
        if not m.target.eq(a, b):
            failures.append((r, a, b))
            if stop_at_first:
                break
    return HomReport(not failures, failures)


# phi triples -----------------------------------------------------------------

def parse_triple(text: str | Sequence[int]) -> tuple[int, int, int]:
    eps = tuple(int(c) for c in text) if isinstance(text, str) else tuple(text)
    if len(eps) != 3 or any(e not in (0, 1) for e in eps):
        raise HomError(f"invalid triple {text!r}")
    return eps


def format_triple(eps: Sequence[int]) -> str:
    return "".join(map(str, eps))


def phi_images(n: int, eps: Sequence[int]):
    S = SymmetricGroup(n)
    eps = parse_triple(eps)
    return lambda g: S.adjacent(g.index) if eps[g.family] else S.identity()


def phi_triple(family: str | Presentation, n: int, e1: int, e2: int, e3: int) -> GeneratorMap:
    """sigma_i -> (i i+1)^e1, tau_i -> (i i+1)^e2, v_i -> (i i+1)^e3 into S_n."""
    P = family if isinstance(family, Presentation) else build_presentation(family, n)
    img = phi_images(n, (e1, e2, e3))
    return GeneratorMap(P, SymmetricGroup(n), {g: img(g) for g in P.generators},
                        f"phi_{e1}{e2}{e3}")


def classify_triples(family: str, n: int) -> list[tuple[int, int, int]]:
    if n < 3:
        raise HomError("classification is stated for n >= 3; every triple is a homomorphism at n = 2")
    P = build_presentation(family, n)
    return [eps for eps in TRIPLES if verify_homomorphism(phi_triple(P, n, *eps), stop_at_first=True)]


# exponent sums ---------------------------------------------------------------

@dataclass(frozen=True)
class ExponentData:
    exp_c: int
    exp_s: int
    exp_cs: int
    parity: int

    def __str__(self):
        return f"expC={self.exp_c} expS={self.exp_s} expCS={self.exp_cs} parity={self.parity}"


def exponent_sums(w: Word) -> ExponentData:
    sums = [0, 0, 0]
    for sym, e in w:
        if isinstance(sym, Gen):
            sums[sym.family] += e
    return ExponentData(sums[0], sums[1], sums[0] + sums[1], sums[2] % 2)


def abmap(n: int, family: str = "VSG") -> GeneratorMap:
    """Abelianization map onto Z x Z x Z_2 (sigma, tau, v)."""
    P = build_presentation(family, n)
    G = AbelianGroup((0, 0, 2))
    return GeneratorMap(P, G, {g: tuple(int(g.family == f) for f in Family) for g in P.generators}, "Abmap")


def exponent_map(kind: str, n: int, family: str = "VSG") -> GeneratorMap:
    """exp^C, exp^S or exp^CS as a map into Z."""
    weights = {"C": (1, 0, 0), "S": (0, 1, 0), "CS": (1, 1, 0)}[kind]
    P = build_presentation(family, n)
    return GeneratorMap(P, integers(), {g: (weights[g.family],) for g in P.generators}, f"exp^{kind}")


def psi_map(n: int, family: str = "VSG") -> GeneratorMap:
    """sigma -> (0, id), tau_i -> (1, id), v_i -> (0, (i i+1)) into Z x S_n."""
    P = build_presentation(family, n)
    G = ZxSn(n)
    S = SymmetricGroup(n)
    images = {}
    for g in P.generators:
        if g.family == Family.CLASSICAL:
            images[g] = G.identity()
        elif g.family == Family.SINGULAR:
            images[g] = G.element(1)
        else:
            images[g] = G.element(0, S.adjacent(g.index))
    return GeneratorMap(P, G, images, "psi")


# counting ----------------------------------------------------------------------

MAX_COUNT_GENERATORS = 5


def _plan(P: Presentation, order: Sequence[Symbol] | None = None):
    """Generator order for the search and, per depth, the relators completed there."""
    gens = list(P.generators)
    rel_support = [(r, {sym for sym, _ in r.word}) for r in P.relators]
    if order is None:
        order, placed = [], set()
        while len(order) < len(gens):
            def score(g):
                done = sum(1 for _, sup in rel_support if g in sup and sup <= placed | {g})
                return (-done, gens.index(g))
            g = min((g for g in gens if g not in placed), key=score)
            order.append(g)
            placed.add(g)
    pos = {g: i for i, g in enumerate(order)}
    checks: list[list[list[tuple[int, int]]]] = [[] for _ in order]
    for r, sup in rel_support:
        if not r.word.letters:
            continue
        depth = max(pos[g] for g in sup)
        checks[depth].append([(pos[g], e) for g, e in r.word])
    return list(order), checks


def iter_homs(P: Presentation, F: FiniteGroup, budget: int | None = None,
              order: Sequence[Symbol] | None = None) -> Iterator[dict[Symbol, Any]]:
    """All homomorphisms P -> F as generator assignments, depth-first in element order."""
    order, checks = _plan(P, order)
    k = len(order)
    table, inverse, ident = F.table, F.inverse, F.id
    assign = [0] * k
    nodes = 0

    def rel_ok(rel):
        x = ident
        for gi, e in rel:
            y = assign[gi] if e > 0 else inverse[assign[gi]]
            for _ in range(abs(e)):
                x = table[x][y]
        return x == ident

    def dfs(depth):
        nonlocal nodes
        if depth == k:
            yield {g: F.els[assign[i]] for i, g in enumerate(order)}
            return
        for x in range(len(F.els)):
            nodes += 1
            if budget is not None and nodes > budget:
                raise HomError(f"search budget {budget} exhausted")
            assign[depth] = x
            if all(rel_ok(rel) for rel in checks[depth]):
                yield from dfs(depth + 1)

    yield from dfs(0)


def count_homs(P: Presentation, target, budget: int | None = None) -> int:
    if len(P.generators) > MAX_COUNT_GENERATORS:
        raise HomError(f"{len(P.generators)} generators exceeds the counting bound {MAX_COUNT_GENERATORS}")
    F = target if isinstance(target, FiniteGroup) else FiniteGroup(target)
    return sum(1 for _ in iter_homs(P, F, budget))


def search_separating_quotient(P: Presentation, a: Word, b: Word, targets: Iterable,
                               budget: int = 2_000_000):
    """
    First verified homomorphism (in target order, then assignment order) with
    distinct images of a and b. Targets are GeneratorMaps (tried as given) or
    finite groups (enumerated). Returns (map, (image_a, image_b)) or None.
    """
    for T in targets:
        if isinstance(T, GeneratorMap):
            if verify_homomorphism(T) and not T.target.eq(T(a), T(b)):
                return T, (T(a), T(b))
            continue
        F = T if isinstance(T, FiniteGroup) else FiniteGroup(T)
        try:
            for images in iter_homs(P, F, budget):
                m = GeneratorMap(P, F.G, images, f"hom to {F}")
                x, y = m(a), m(b)
                if not F.G.eq(x, y):
                    return m, (x, y)
        except HomError:
            continue
    return None
