"""
Tietze simplification with a replayable trace.

Moves are applied in a fixed order until nothing changes: reduce relators,
drop empty ones, drop rotation/inversion duplicates, then eliminate one
generator through the shortest relator in which some generator occurs exactly
once. Among the candidates in that relator, the generator with the fewest total
occurrences wins; ties go to the generator listed last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentations import Presentation, Relator
from .words import Letter, Symbol, Word, cyclic_key, cyclic_reduce, format_word

MAX_DEFINING_LENGTH = 64


@dataclass(frozen=True)
class Move:
    kind: str  # CyclicReduce | DeleteTrivialRelator | DeduplicateRelator | EliminateGenerator
    index: int = -1
    generator: Symbol | None = None
    expression: Word | None = None
    relator: Word | None = None

    def __str__(self):
        if self.kind == "EliminateGenerator":
            return f"eliminate {self.generator} = {format_word(self.expression)} via {format_word(self.relator)}"
        return f"{self.kind} #{self.index}"


@dataclass
class TietzeTrace:
    moves: list[Move] = field(default_factory=list)
    exhausted: bool = False

    @property
    def substitutions(self) -> list[tuple[Symbol, Word]]:
        return [(m.generator, m.expression) for m in self.moves if m.kind == "EliminateGenerator"]

    def apply(self, w: Word) -> Word:
        """Rewrite a word over the input generators into the surviving generators."""
        for g, expr in self.substitutions:
            w = substitute(w, g, expr)
        return w

    def summary(self) -> str:
        counts: dict[str, int] = {}
        for m in self.moves:
            counts[m.kind] = counts.get(m.kind, 0) + 1
        elim = ", ".join(str(g) for g, _ in self.substitutions)
        text = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        return text + (f"; eliminated {elim}" if elim else "") + ("; budget exhausted" if self.exhausted else "")


def substitute(w: Word, g: Symbol, expr: Word) -> Word:
    letters: list[tuple[Symbol, int]] = []
    for sym, e in w:
        if sym == g:
            img = expr if e > 0 else ~expr
            for _ in range(abs(e)):
                letters.extend(img.letters)
        else:
            letters.append((sym, e))
    return Word.of(letters, w.strands)


def _occurrences(w: Word, g: Symbol) -> int:
    return sum(abs(e) for sym, e in w if sym == g)


def solve_for(r: Word, g: Symbol) -> Word:
    """From a relator u g^e x = 1 with e = +-1 and g absent from u, x, solve for g."""
    letters = r.letters
    k = next(i for i, (sym, _) in enumerate(letters) if sym == g)
    u, e, x = Word(letters[:k], r.strands), letters[k].exp, Word(letters[k + 1:], r.strands)
    # u g x = 1  =>  g = u^-1 x^-1 ;  u g^-1 x = 1  =>  g = x u
    return (~u) * (~x) if e == 1 else x * u


def _step(gens: list[Symbol], rels: list[Word], trace: TietzeTrace) -> bool:
    for i, r in enumerate(rels):
        c = cyclic_reduce(r)
        if c != r:
            rels[i] = c
            trace.moves.append(Move("CyclicReduce", i))
            return True
    for i, r in enumerate(rels):
        if not r.letters:
            del rels[i]
            trace.moves.append(Move("DeleteTrivialRelator", i))
            return True
    seen = {}
    for i, r in enumerate(rels):
        k = cyclic_key(r)
        if k in seen:
            del rels[i]
            trace.moves.append(Move("DeduplicateRelator", i))
            return True
        seen[k] = i
    totals = {g: sum(_occurrences(r, g) for r in rels) for g in gens}
    order = sorted(range(len(rels)), key=lambda i: (len(rels[i]), i))
    for i in order:
        r = rels[i]
        if len(r) > MAX_DEFINING_LENGTH:
            break
        cands = [g for g in gens if _occurrences(r, g) == 1]
        if not cands:
            continue
        g = min(cands, key=lambda h: (totals[h], -gens.index(h)))
        expr = solve_for(r, g)
        del rels[i]
        for j, other in enumerate(rels):
            if g in other.symbols():
                rels[j] = substitute(other, g, expr)
        gens.remove(g)
        trace.moves.append(Move("EliminateGenerator", i, g, expr, r))
        return True
    return False


def tietze_simplify(P: Presentation, budget: int = 10_000, keep: Sequence[Symbol] = ()) -> tuple[Presentation, TietzeTrace]:
    """
    Simplify P; ``keep`` lists generators that must not be eliminated.
    The result is a CUSTOM presentation over the surviving generators.
    """
    gens = list(P.generators)
    rels = [r.word for r in P.relators]
    trace = TietzeTrace()
    protected = [g for g in keep if g in gens]
    while True:
        if len(trace.moves) >= budget:
            trace.exhausted = True
            break
        work = [g for g in gens if g not in protected]
        before = len(trace.moves)
        changed = _step_protected(gens, work, rels, trace)
        if not changed:
            break
        assert len(trace.moves) > before
    out = Presentation("CUSTOM", P.strands, tuple(gens),
                       tuple(Relator(w, "TIETZE") for w in rels), P.name)
    return out, trace


def _step_protected(gens, work, rels, trace) -> bool:
    if len(work) == len(gens):
        return _step(gens, rels, trace)
    # eliminate only among ``work``; other moves as usual
    shadow = list(work)
    changed = _step(shadow, rels, trace)
    if changed and trace.moves[-1].kind == "EliminateGenerator":
        gens.remove(trace.moves[-1].generator)
    return changed


def replay(P: Presentation, trace: TietzeTrace) -> Presentation:
    """Re-apply a recorded trace to P and return the resulting presentation."""
    gens = list(P.generators)
    rels = [r.word for r in P.relators]
    for m in trace.moves:
        if m.kind == "CyclicReduce":
            rels[m.index] = cyclic_reduce(rels[m.index])
        elif m.kind in ("DeleteTrivialRelator", "DeduplicateRelator"):
            del rels[m.index]
        else:
            r = rels.pop(m.index)
            if r != m.relator:
                raise ValueError(f"trace mismatch at {m}")
            rels = [substitute(o, m.generator, m.expression) if m.generator in o.symbols() else o for o in rels]
            gens.remove(m.generator)
    return Presentation("CUSTOM", P.strands, tuple(gens), tuple(Relator(w, "TIETZE") for w in rels), P.name)
