"""
Word-problem engines for presented groups and two-way isomorphism certificates.

An engine answers ``decide(w)`` with True (w is proven trivial), False (w is
proven nontrivial) or None (undecided). Exact engines (free products, abelian
groups, Z x S_n) only accept presentations they recognize literally. The
prover is one-sided: it searches for a derivation of triviality after Tietze
simplification and can refute triviality through a finite quotient.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .freeproduct import Abelian, FactorSpec, Free, FreeProductGroup, fp_normalize, parse_factor_spec
from .homs import GeneratorMap, eval_hom, iter_homs, verify_homomorphism
from .perm import Permutation
from .presentations import Presentation, PresentationError, Relator, custom, format_presentation, parse_presentation
from .snf import smith_normal_form
from .targets import FiniteGroup, SymmetricGroup, ZxSn
from .tietze import tietze_simplify
from .words import Symbol, Word, cyclic_key, cyclic_reduce, format_word, parse_abstract_word


class UndecidedError(RuntimeError):
    pass


def _w(P: Presentation, letters) -> Word:
    return Word.of(letters, P.strands if P.is_braid else None)


def commutator(x: Symbol, y: Symbol, P: Presentation) -> Word:
    return _w(P, [(x, 1), (y, 1), (x, -1), (y, -1)])


# free products ---------------------------------------------------------------

def free_product_presentation(spec: FactorSpec | str, names: Sequence[str] | None = None) -> Presentation:
    """Standard presentation: each abelian factor gets pairwise commutators and torsion powers."""
    from .freeproduct import standard_generator_names
    spec = parse_factor_spec(spec) if isinstance(spec, str) else spec
    names = list(names or standard_generator_names(spec))
    rels, pos = [], 0
    for f in spec.factors:
        dim = f.dim if isinstance(f, Abelian) else f.rank
        block = names[pos:pos + dim]
        pos += dim
        if isinstance(f, Abelian):
            for a, b in itertools.combinations(block, 2):
                rels.append(f"{a} {b} {a}^-1 {b}^-1")
            for g, d in zip(block[f.free_rank:], f.torsion):
                rels.append(f"{g}^{d}")
    return custom(names, rels, name=str(spec))


def _assignment_for(spec: FactorSpec, names: Sequence[Symbol]) -> dict:
    return dict(zip(names, spec.generators()))


class FreeProductEngine:
    """Exact word problem for a presentation that is literally a standard free product."""

    name = "free-product"

    def __init__(self, P: Presentation, spec: FactorSpec, names: Sequence[Symbol]):
        std = free_product_presentation(spec, [str(x) for x in names])
        if sorted(map(str, P.generators)) != sorted(map(str, names)):
            raise PresentationError("generator sets differ")
        mine = {cyclic_key(r.word) for r in P.relators if r.word.letters}
        theirs = {cyclic_key(r.word) for r in std.relators}
        if mine != theirs:
            raise PresentationError(f"{P.name or 'presentation'} is not the standard presentation of {spec}")
        self.P, self.spec = P, spec
        self.assignment = _assignment_for(spec, names)
        self.group = FreeProductGroup(spec)

    def normal_form(self, w: Word):
        return fp_normalize(w, self.spec, self.assignment)

    def decide(self, w: Word) -> bool:
        return not self.normal_form(w).syllables


def recognize_free_product(P: Presentation) -> FreeProductEngine | None:
    """
    Read P as a free product of abelian factors if every relator is a generator
    commutator or a generator power and commuting generators form cliques.
    """
    gens = list(P.generators)
    edges: set[frozenset] = set()
    powers: dict[Symbol, int] = {}
    for r in P.relators:
        w = cyclic_reduce(r.word)
        if not w.letters:
            continue
        L = w.letters
        if len(L) == 1:
            if L[0].symbol in powers or abs(L[0].exp) < 2:
                return None
            powers[L[0].symbol] = abs(L[0].exp)
        elif (len(L) == 4 and all(abs(e) == 1 for _, e in L) and L[0].symbol == L[2].symbol
              and L[1].symbol == L[3].symbol and L[0].exp == -L[2].exp and L[1].exp == -L[3].exp
              and L[0].symbol != L[1].symbol):
            edges.add(frozenset((L[0].symbol, L[1].symbol)))
        else:
            return None
    # connected components of the commuting graph must be cliques
    comp: dict[Symbol, int] = {}
    comps: list[list[Symbol]] = []
    for g in gens:
        if g in comp:
            continue
        stack, block = [g], []
        comp[g] = len(comps)
        while stack:
            x = stack.pop()
            block.append(x)
            for y in gens:
                if y not in comp and frozenset((x, y)) in edges:
                    comp[y] = len(comps)
                    stack.append(y)
        comps.append(sorted(block, key=gens.index))
    for block in comps:
        for a, b in itertools.combinations(block, 2):
            if frozenset((a, b)) not in edges:
                return None
    factors, names = [], []
    for block in comps:
        free = [g for g in block if g not in powers]
        tors = [g for g in block if g in powers]
        factors.append(Abelian(len(free), tuple(powers[g] for g in tors)))
        names += free + tors
    try:
        return FreeProductEngine(P, FactorSpec(tuple(factors)), names)
    except PresentationError:
        return None


# abelian groups ----------------------------------------------------------------

class AbelianEngine:
    """Exact word problem when all generator commutators are relators: lattice membership."""

    name = "abelian"

    def __init__(self, P: Presentation):
        keys = {cyclic_key(r.word) for r in P.relators}
        for a, b in itertools.combinations(P.generators, 2):
            if cyclic_key(commutator(a, b, P)) not in keys:
                raise PresentationError(f"generators {a}, {b} do not commute by a relator")
        self.P = P
        self.idx = {g: i for i, g in enumerate(P.generators)}
        rows = []
        for r in P.relators:
            row = [0] * len(self.idx)
            for sym, e in r.word:
                row[self.idx[sym]] += e
            rows.append(row)
        self.rows = [r for r in rows if any(r)]
        k = len(self.idx)
        self.snf = smith_normal_form(self.rows, k) if self.rows else None

    def vector(self, w: Word) -> list[int]:
        v = [0] * len(self.idx)
        for sym, e in w:
            v[self.idx[sym]] += e
        return v

    def decide(self, w: Word) -> bool:
        v = self.vector(w)
        if self.snf is None:
            return not any(v)
        # v in rowspan(A)  <=>  y = v V has y_j divisible by d_j (j < rank) and 0 beyond
        V = self.snf.V
        y = [sum(v[i] * V[i][j] for i in range(len(v))) for j in range(len(v))]
        for j, yj in enumerate(y):
            d = self.snf.diagonal[j] if j < len(self.snf.diagonal) else 0
            if (d == 0 and yj) or (d and yj % d):
                return False
        return True


# Z x S_n -----------------------------------------------------------------------

def zxsn_presentation(n: int) -> Presentation:
    """Generators t, s1..s_{n-1}: Coxeter relations for S_n plus t central."""
    ss = [f"s{i}" for i in range(1, n)]
    rels = [f"{x}^2" for x in ss]
    rels += [(f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}") for i in range(1, n - 1)]
    rels += [(f"s{i} s{j}", f"s{j} s{i}") for i in range(1, n) for j in range(i + 2, n)]
    rels += [(f"t {x}", f"{x} t") for x in ss]
    return custom(["t"] + ss, rels, name=f"Z x S{n}", strands=n)


def z_times_z2_presentation() -> Presentation:
    return custom(["t", "u"], [("t u", "u t"), "u^2"], name="Z x Z_2")


class ZxSnEngine:
    """Exact word problem for the standard Z x S_n presentation by evaluation."""

    name = "ZxSn"

    def __init__(self, P: Presentation, n: int):
        std = zxsn_presentation(n)
        if tuple(map(str, P.generators)) != std.generators or \
                {cyclic_key(r.word) for r in P.relators} != {cyclic_key(r.word) for r in std.relators}:
            raise PresentationError("not the standard Z x S_n presentation")
        self.G = ZxSn(n)
        S = SymmetricGroup(n)
        self.images = {"t": self.G.element(1)}
        self.images.update({f"s{i}": self.G.element(0, S.adjacent(i)) for i in range(1, n)})
        self.P = P

    def evaluate(self, w: Word):
        out = self.G.identity()
        for sym, e in w:
            x = self.images[str(sym)] if e > 0 else self.G.inv(self.images[str(sym)])
            for _ in range(abs(e)):
                out = self.G.mul(out, x)
        return out

    def decide(self, w: Word) -> bool:
        return self.evaluate(w) == self.G.identity()


# one-sided prover ----------------------------------------------------------------

class Prover:
    """
    Proves triviality by Tietze simplification followed by a best-first search
    over cyclic words, replacing any piece u of a relator u x (|u| >= |x|) by
    x^-1. Refutes triviality only through a homomorphism onto a finite group.
    """

    name = "prover"

    def __init__(self, P: Presentation, budget: int = 20_000, refuters: Sequence = (),
                 tietze_budget: int = 2_000):
        self.P = P
        self.budget = budget
        self.Q, self.trace = tietze_simplify(P, tietze_budget)
        self.symbols = list(self.Q.generators)
        self.code = {g: i + 1 for i, g in enumerate(self.symbols)}
        self.involutions = {self.code[g] for g in self.Q.involutions}
        self.rules: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
        for r in self.Q.relators:
            units = self._units(r.word)
            if not units:
                continue
            for base in (units, tuple(-x for x in reversed(units))):
                L = len(base)
                for k in range(L):
                    rot = base[k:] + base[:k]
                    for cut in range((L + 1) // 2, L + 1):
                        u, x = rot[:cut], rot[cut:]
                        rhs = self._norm_linear(tuple(-y for y in reversed(x)))
                        self.rules.setdefault(u[0], []).append((u, rhs))
        for key in self.rules:
            self.rules[key] = sorted(set(self.rules[key]), key=lambda ur: (len(ur[1]) - len(ur[0]), ur))
        self.refuters = list(refuters)
        self._refuting_maps: list | None = None

    def _units(self, w: Word) -> tuple[int, ...]:
        out = []
        for sym, e in w:
            out.extend([self.code[sym] * (1 if e > 0 else -1)] * abs(e))
        return self._norm_linear(tuple(out))

    def _norm_linear(self, units: tuple[int, ...]) -> tuple[int, ...]:
        stack: list[int] = []
        for x in units:
            if -x in self.involutions:
                x = -x
            if stack and (stack[-1] == -x or (x in self.involutions and stack[-1] == x)):
                stack.pop()
            else:
                stack.append(x)
        return tuple(stack)

    def _norm_cyclic(self, units: tuple[int, ...]) -> tuple[int, ...]:
        w = list(self._norm_linear(units))
        while len(w) >= 2 and (w[0] == -w[-1] or (w[0] == w[-1] and w[0] in self.involutions)):
            w = list(self._norm_linear(tuple(w[1:-1])))
        return tuple(w)

    @staticmethod
    def _canon(w: tuple[int, ...]) -> tuple[int, ...]:
        if not w:
            return w
        inv = tuple(-x for x in reversed(w))
        return min(min(b[k:] + b[:k] for k in range(len(b))) for b in (w, inv))

    def prove_trivial(self, w: Word) -> bool:
        start = self._norm_cyclic(self._units(self.trace.apply(w)))
        if not start:
            return True
        heap = [(len(start), start)]
        seen = {self._canon(start)}
        expanded = 0
        while heap and expanded < self.budget:
            _, cur = heapq.heappop(heap)
            expanded += 1
            L = len(cur)
            for k in range(L):
                rot = cur[k:] + cur[:k]
                for u, rhs in self.rules.get(rot[0], ()):
                    if len(u) > L or rot[:len(u)] != u:
                        continue
                    nxt = self._norm_cyclic(rhs + rot[len(u):])
                    if not nxt:
                        return True
                    c = self._canon(nxt)
                    if c not in seen and len(nxt) <= L:
                        seen.add(c)
                        heapq.heappush(heap, (len(nxt), nxt))
        return False

    def refute(self, w: Word):
        """A finite-quotient homomorphism under which w is nontrivial, or None."""
        if self._refuting_maps is None:
            self._refuting_maps = []
            for F in self.refuters:
                F = F if isinstance(F, FiniteGroup) else FiniteGroup(F)
                for images in iter_homs(self.P, F, budget=2_000_000):
                    self._refuting_maps.append(GeneratorMap(self.P, F.G, images, f"hom to {F}"))
        for m in self._refuting_maps:
            x = eval_hom(m, w)
            if not m.target.eq(x, m.target.identity()):
                return m
        return None

    def decide(self, w: Word) -> bool | None:
        if self.prove_trivial(w):
            return True
        if self.refuters and self.refute(w) is not None:
            return False
        return None


def engine_for(P: Presentation, refuters: Sequence = (), budget: int = 20_000):
    """Most exact available engine for P."""
    gens = tuple(map(str, P.generators))
    if gens and gens[0] == "t" and all(g == f"s{i}" for i, g in enumerate(gens[1:], 1)):
        try:
            return ZxSnEngine(P, len(gens))
        except PresentationError:
            pass
    fp = recognize_free_product(P)
    if fp is not None:
        return fp
    try:
        return AbelianEngine(P)
    except PresentationError:
        pass
    return Prover(P, budget, refuters)


# presented groups as targets -----------------------------------------------------------

class PresentedGroup:
    """Words over a presentation, with equality decided by an engine (unproven counts as unequal)."""

    def __init__(self, P: Presentation, engine=None):
        self.P = P
        self.engine = engine or engine_for(P)
        self.strands = P.strands if P.is_braid else None

    def identity(self) -> Word:
        return Word((), self.strands)

    def mul(self, a: Word, b: Word) -> Word:
        return a * b

    def inv(self, a: Word) -> Word:
        return ~a

    def decide_equal(self, a: Word, b: Word) -> bool | None:
        d = a * ~b
        if not d.letters:
            return True
        return self.engine.decide(d)

    def eq(self, a: Word, b: Word) -> bool:
        return self.decide_equal(a, b) is True

    def gen(self, g: Symbol) -> Word:
        return Word.of([(g, 1)], self.strands)

    def render(self, a: Word) -> str:
        return format_word(a)

    def __str__(self):
        return self.P.name or self.P.family


def word_map(source: Presentation, target: PresentedGroup, images: Mapping, name: str = "") -> GeneratorMap:
    """GeneratorMap whose images are words (or word strings) in the target presentation."""
    imgs = {}
    for g in source.generators:
        x = images[g] if g in images else images[str(g)]
        imgs[g] = target.P.word(x) if isinstance(x, str) else x
    return GeneratorMap(source, target, imgs, name)


# certificates ------------------------------------------------------------------

@dataclass
class IsoCertificate:
    P1: Presentation
    P2: Presentation
    map12: Mapping          # P1 generator -> Word over P2
    map21: Mapping          # P2 generator -> Word over P1


@dataclass
class IsoReport:
    valid: bool
    checks: dict[str, bool | None] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    engines: tuple[str, str] = ("", "")

    def __bool__(self):
        return self.valid


def _check(label: str, items: Iterable[tuple[str, Word]], engine, report: IsoReport, G: PresentedGroup) -> bool | None:
    verdict: bool | None = True
    for desc, w in items:
        d = True if not w.letters else engine.decide(w)
        if d is not True:
            report.failures.append(f"{label}: {desc} -> {format_word(w)} "
                                   + ("is nontrivial" if d is False else "could not be decided"))
            verdict = False if d is False or verdict is False else None
    report.checks[label] = verdict
    return verdict


def verify_iso(cert: IsoCertificate, engines: tuple | None = None, refuters: Sequence = ()) -> IsoReport:
    """
    Validate a two-way certificate. Each check must be proven by the engine of
    the presentation it lives in; an undecided check rejects the certificate.
    """
    e1, e2 = engines or (None, None)
    e1 = e1 or engine_for(cert.P1, refuters)
    e2 = e2 or engine_for(cert.P2, refuters)
    G1, G2 = PresentedGroup(cert.P1, e1), PresentedGroup(cert.P2, e2)
    f = word_map(cert.P1, G2, cert.map12, "map12")
    g = word_map(cert.P2, G1, cert.map21, "map21")
    report = IsoReport(False, engines=(e1.name, e2.name))
    _check("map12 relators", ((str(r), f(r.word)) for r in cert.P1.relators), e2, report, G2)
    _check("map21 relators", ((str(r), g(r.word)) for r in cert.P2.relators), e1, report, G1)
    _check("map21.map12 = id", ((str(x), g(f(G1.gen(x))) * ~G1.gen(x)) for x in cert.P1.generators), e1, report, G1)
    _check("map12.map21 = id", ((str(x), f(g(G2.gen(x))) * ~G2.gen(x)) for x in cert.P2.generators), e2, report, G2)
    report.valid = all(v is True for v in report.checks.values())
    return report


# certificate files ------------------------------------------------------------

def format_certificate(cert: IsoCertificate) -> str:
    out = ["[P1]", format_presentation(cert.P1).rstrip(), "[P2]", format_presentation(cert.P2).rstrip(), "[map12]"]
    for g in cert.P1.generators:
        x = cert.map12.get(g, cert.map12.get(str(g)))
        out.append(f"{g} -> {x if isinstance(x, str) else format_word(x)}")
    out.append("[map21]")
    for g in cert.P2.generators:
        x = cert.map21.get(g, cert.map21.get(str(g)))
        out.append(f"{g} -> {x if isinstance(x, str) else format_word(x)}")
    return "\n".join(out) + "\n"


def _parse_word_in(P: Presentation, text: str) -> Word:
    text = text.strip()
    if text in ("e", "1", ""):
        return Word((), P.strands if P.is_braid else None)
    return P.word(text)


def parse_certificate(text: str) -> IsoCertificate:
    blocks: dict[str, list[str]] = {}
    cur = None
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("[") and s.endswith("]"):
            cur = s[1:-1]
            blocks[cur] = []
        elif cur is not None and s:
            blocks[cur].append(line)
    for key in ("P1", "P2", "map12", "map21"):
        if key not in blocks:
            raise PresentationError(f"certificate is missing the [{key}] block")
    P1 = parse_presentation("\n".join(blocks["P1"]))
    P2 = parse_presentation("\n".join(blocks["P2"]))

    def read(lines, src: Presentation, dst: Presentation):
        table = {str(g): g for g in src.generators}
        out = {}
        for line in lines:
            lhs, sep, rhs = line.partition("->")
            if not sep or lhs.strip() not in table:
                raise PresentationError(f"bad map line {line!r}")
            out[table[lhs.strip()]] = _parse_word_in(dst, rhs)
        return out

    return IsoCertificate(P1, P2, read(blocks["map12"], P1, P2), read(blocks["map21"], P2, P1))


# fingerprints ------------------------------------------------------------------

def fingerprint(P: Presentation, targets: Sequence = ("S3", "S4")) -> dict[str, int]:
    from .homs import count_homs
    out = {}
    for name in targets:
        out[name] = count_homs(P, FiniteGroup(SymmetricGroup(int(name[1:])), name))
    return out
