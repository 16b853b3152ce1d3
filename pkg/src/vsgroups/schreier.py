"""
Reidemeister-Schreier rewriting for kernels of homomorphisms onto finite groups.

Cosets of the kernel are identified with image elements, so the coset table is
read off the homomorphism directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Sequence

from .homs import GeneratorMap, HomError, eval_hom, verify_homomorphism
from .presentations import Presentation, Relator
from .words import Family, Gen, Symbol, Word, format_word


def preference_order(gens: Sequence[Symbol]) -> list[Symbol]:
    """Transversal search order: virtual, then classical, then singular letters; other symbols as listed."""
    rank = {Family.VIRTUAL: 0, Family.CLASSICAL: 1, Family.SINGULAR: 2}

    def key(g):
        if isinstance(g, Gen):
            return (rank[g.family], g.index, 0)
        return (3, 0, gens.index(g))
    return sorted(gens, key=key)


@dataclass
class CosetTable:
    hom: GeneratorMap
    cosets: list[Any]                    # image elements, BFS order
    transversal: list[Word]              # representative of each coset
    action: dict[tuple[int, Symbol, int], int]

    def index_of(self, x) -> int:
        for i, y in enumerate(self.cosets):
            if self.hom.target.eq(x, y):
                return i
        raise KeyError(x)

    def coset_of(self, w: Word, start: int = 0) -> int:
        c = start
        for sym, e in w:
            for _ in range(abs(e)):
                c = self.action[(c, sym, 1 if e > 0 else -1)]
        return c

    def __len__(self):
        return len(self.cosets)


def coset_table_from_hom(m: GeneratorMap, check: bool = True) -> CosetTable:
    if check and not verify_homomorphism(m, stop_at_first=True):
        raise HomError(f"{m.name or 'map'} is not a homomorphism")
    G = m.target
    P = m.source
    strands = P.strands if P.is_braid else None
    cosets = [G.identity()]
    reps = [Word((), strands)]
    lookup = _Lookup(G)
    lookup.add(cosets[0], 0)
    queue = deque([0])
    order = preference_order(list(P.generators))
    while queue:
        c = queue.popleft()
        for g in order:
            y = G.mul(cosets[c], m.images[g])
            if lookup.find(y) is None:
                lookup.add(y, len(cosets))
                cosets.append(y)
                reps.append(reps[c] * Word.of([(g, 1)], strands))
                queue.append(len(cosets) - 1)
    action = {}
    for c, x in enumerate(cosets):
        for g in P.generators:
            action[(c, g, 1)] = lookup.find(G.mul(x, m.images[g]))
            action[(c, g, -1)] = lookup.find(G.mul(x, G.inv(m.images[g])))
    return CosetTable(m, cosets, reps, action)


class _Lookup:
    """Element index for hashable targets, with a linear fallback."""

    def __init__(self, G):
        self.G = G
        self.table: dict = {}
        self.items: list = []

    def add(self, x, i):
        try:
            self.table[x] = i
        except TypeError:
            self.items.append((x, i))

    def find(self, x):
        try:
            return self.table.get(x)
        except TypeError:
            return next((i for y, i in self.items if self.G.eq(x, y)), None)


@dataclass(frozen=True)
class SchreierGenerator:
    coset: int
    lam: Word
    gen: Symbol
    word: Word
    name: str
    removable: bool

    def __str__(self):
        return f"{self.name} = {format_word(self.word)}"


def _lam_label(lam: Word) -> str:
    def part(sym, e):
        return f"{sym}" if e == 1 else (f"{sym}p{e}" if e > 0 else f"{sym}m{-e}")
    return "".join(part(sym, e) for sym, e in lam) or "1"


def schreier_generators(t: CosetTable, P: Presentation | None = None) -> list[SchreierGenerator]:
    """S_{lam,a} = (lam a) rep(lam a)^-1 for every coset and generator; freely trivial ones are removable."""
    P = P or t.hom.source
    single = len(t) == 1
    out = []
    for c, lam in enumerate(t.transversal):
        for a in P.generators:
            a_w = Word.of([(a, 1)], lam.strands)
            target = t.action[(c, a, 1)]
            w = lam * a_w * ~t.transversal[target]
            name = str(a) if single else f"{a}_{_lam_label(lam)}"
            out.append(SchreierGenerator(c, lam, a, w, name, not w.letters))
    return out


@dataclass
class RewrittenPresentation:
    table: CosetTable
    generators: list[SchreierGenerator]
    relators: list[Word]
    sources: list[tuple[Relator, int]]

    def presentation(self, name: str = "") -> Presentation:
        gens = tuple(g.name for g in self.generators if not g.removable)
        rels = tuple(Relator(w, "RS") for w in self.relators)
        return Presentation("CUSTOM", 2, gens, rels, name)

    def definitions(self) -> dict[str, Word]:
        return {g.name: g.word for g in self.generators if not g.removable}


def rewrite_word(t: CosetTable, sg: list[SchreierGenerator], w: Word, start: int = 0) -> Word:
    """Rewrite w (read from coset ``start``) as a word in the non-removable Schreier generators."""
    by_key = {(g.coset, g.gen): g for g in sg}
    letters = []
    c = start
    for sym, e in w:
        for _ in range(abs(e)):
            if e > 0:
                g = by_key[(c, sym)]
                if not g.removable:
                    letters.append((g.name, 1))
                c = t.action[(c, sym, 1)]
            else:
                c = t.action[(c, sym, -1)]
                g = by_key[(c, sym)]
                if not g.removable:
                    letters.append((g.name, -1))
    return Word.of(letters, None)


def rewrite_relators(t: CosetTable, P: Presentation | None = None,
                     sg: list[SchreierGenerator] | None = None) -> RewrittenPresentation:
    """One rewritten relator per (relator, coset): lam r lam^-1 read from the identity coset."""
    P = P or t.hom.source
    sg = sg if sg is not None else schreier_generators(t, P)
    rels, sources = [], []
    for r in P.relators:
        for c in range(len(t)):
            rels.append(rewrite_word(t, sg, r.word, c))
            sources.append((r, c))
    return RewrittenPresentation(t, sg, rels, sources)
