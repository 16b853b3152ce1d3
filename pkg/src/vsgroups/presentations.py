"""
Group presentations: the registry of braid-type families and a plain-text format.

Relations L = R are stored as the single cyclically reduced relator L R^-1.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .words import (
    Family, Gen, Symbol, Word, WordError, cyclic_key, cyclic_reduce, format_word,
    parse_abstract_word, parse_symbol, s, t, v, word_invert,
)

REGISTRY = ("B", "VB", "SG", "VSG", "WCSG", "WSG", "UCVSG", "UVSG",
            "FCVSG", "FCWSG", "FWSG", "GCVSG")
QUOTIENTS = ("VSG", "WCSG", "WSG", "UCVSG", "UVSG", "FCVSG", "FCWSG", "FWSG", "GCVSG")

# extra relation sets (1)-(6) of the quotient diagram, on top of VSG
QUOTIENT_RELATIONS = {
    "VSG": (),
    "WCSG": ("Q1",),
    "UCVSG": ("Q1", "Q2"),
    "WSG": ("Q1", "Q3"),
    "UVSG": ("Q1", "Q3", "Q2", "Q4"),
    "FCVSG": ("Q5",),
    "FCWSG": ("Q1", "Q5"),
    "FWSG": ("Q1", "Q3", "Q5"),
    "GCVSG": ("Q5", "Q6"),
}


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relator:
    word: Word
    tag: str = ""
    lhs: Word | None = field(default=None, compare=False)
    rhs: Word | None = field(default=None, compare=False)

    def sides(self) -> tuple[Word, Word]:
        """The original L = R form, or (relator, empty) when unknown."""
        if self.lhs is None:
            return self.word, Word((), self.word.strands)
        return self.lhs, self.rhs

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class Presentation:
    family: str
    strands: int
    generators: tuple[Symbol, ...]
    relators: tuple[Relator, ...]
    name: str = field(default="", compare=False)

    @property
    def involutions(self) -> frozenset[Symbol]:
        out = set()
        for r in self.relators:
            if len(r.word.letters) == 1 and abs(r.word.letters[0].exp) == 2:
                out.add(r.word.letters[0].symbol)
        return frozenset(out)

    @property
    def is_braid(self) -> bool:
        return self.family != "CUSTOM"

    def word(self, text: str) -> Word:
        """Parse a word over this presentation's generators."""
        if self.is_braid:
            from .words import parse_word
            return parse_word(text, self.strands)
        return parse_abstract_word(text, self.generators)

    def relator_words(self) -> list[Word]:
        return [r.word for r in self.relators]

    def with_relators(self, extra: Iterable[Relator], family: str | None = None) -> "Presentation":
        rels = list(self.relators)
        seen = {cyclic_key(r.word) for r in rels}
        for r in extra:
            k = cyclic_key(r.word)
            if r.word.letters and k not in seen:
                seen.add(k)
                rels.append(r)
        return Presentation(family or self.family, self.strands, self.generators, tuple(rels), self.name)

    def __str__(self) -> str:
        return format_presentation(self)


def relation(lhs: Sequence, rhs: Sequence, tag: str, n: int | None = None) -> Relator:
    """Relator L R^-1 from two letter sequences (symbols or (symbol, exp) pairs)."""

    def as_word(seq):
        return Word.of([x if isinstance(x, tuple) else (x, 1) for x in seq], n)

    L, R = as_word(lhs), as_word(rhs)
    return Relator(cyclic_reduce(L * word_invert(R)), tag, L, R)


def custom(generators: Sequence[str], relations: Iterable[tuple[str, str] | str],
           name: str = "", strands: int = 2) -> Presentation:
    """CUSTOM presentation from text: each relation is ``"lhs"`` (= 1) or ``("lhs", "rhs")``."""
    gens = tuple(generators)
    rels = []
    for rel in relations:
        if isinstance(rel, str):
            rels.append(Relator(cyclic_reduce(parse_abstract_word(rel, gens)), "CUSTOM"))
        else:
            L, R = parse_abstract_word(rel[0], gens), parse_abstract_word(rel[1], gens)
            rels.append(Relator(cyclic_reduce(L * ~R), "CUSTOM", L, R))
    return Presentation("CUSTOM", strands, gens, tuple(rels), name)


# registry ----------------------------------------------------------------

def _braid_gens(n: int, families: str) -> tuple[Gen, ...]:
    make = {"s": s, "t": t, "v": v}
    return tuple(make[f](i) for f in families for i in range(1, n))


def _far_pairs(n: int):
    """Unordered index pairs i < j with j - i >= 2."""
    return [(i, j) for i in range(1, n) for j in range(i + 2, n)]


def _adjacent(n: int):
    """Ordered index pairs with |i - j| = 1."""
    return [(i, i + 1) for i in range(1, n - 1)] + [(i + 1, i) for i in range(1, n - 1)]


def _dedupe(rels: list[Relator]) -> list[Relator]:
    seen, out = set(), []
    for r in rels:
        k = cyclic_key(r.word)
        if k not in seen:
            seen.add(k)
            out.append(r)
    return out


def _artin(n):
    rels = [relation([s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)], "AR1", n) for i in range(1, n - 1)]
    rels += [relation([s(i), s(j)], [s(j), s(i)], "AR2", n) for i, j in _far_pairs(n)]
    return rels


def _vb(n):
    rels = _artin(n)
    rels += [relation([v(i), v(i + 1), v(i)], [v(i + 1), v(i), v(i + 1)], "PR1", n) for i in range(1, n - 1)]
    rels += [relation([v(i), v(j)], [v(j), v(i)], "PR2", n) for i, j in _far_pairs(n)]
    rels += [relation([(v(i), 2)], [], "PR3", n) for i in range(1, n)]
    for i, j in _far_pairs(n):
        rels.append(relation([s(i), v(j)], [v(j), s(i)], "MR1", n))
        rels.append(relation([s(j), v(i)], [v(i), s(j)], "MR1", n))
    rels += [relation([v(i), v(i + 1), s(i)], [s(i + 1), v(i), v(i + 1)], "MR2", n) for i in range(1, n - 1)]
    return rels


def _sg(n):
    rels = _artin(n)
    rels += [relation([t(i), t(j)], [t(j), t(i)], "SR1", n) for i, j in _far_pairs(n)]
    for i, j in _far_pairs(n):
        rels.append(relation([t(i), s(j)], [s(j), t(i)], "MR1", n))
        rels.append(relation([t(j), s(i)], [s(i), t(j)], "MR1", n))
    rels += [relation([t(i), s(i)], [s(i), t(i)], "MR2", n) for i in range(1, n)]
    rels += [relation([s(i), s(i + 1), t(i)], [t(i + 1), s(i), s(i + 1)], "MR3", n) for i in range(1, n - 1)]
    rels += [relation([s(i + 1), s(i), t(i + 1)], [t(i), s(i + 1), s(i)], "MR4", n) for i in range(1, n - 1)]
    return rels


def _vsg(n):
    rels = [relation([(v(i), 2)], [], "2PR", n) for i in range(1, n)]
    rels += [relation([s(i), t(i)], [t(i), s(i)], "2PR", n) for i in range(1, n)]
    for i, j in _adjacent(n):
        rels.append(relation([s(i), s(j), s(i)], [s(j), s(i), s(j)], "3PR1", n))
        rels.append(relation([v(i), v(j), v(i)], [v(j), v(i), v(j)], "3PR2", n))
        rels.append(relation([v(i), s(j), v(i)], [v(j), s(i), v(j)], "3PR3", n))
        rels.append(relation([v(i), t(j), v(i)], [v(j), t(i), v(j)], "3PR4", n))
        rels.append(relation([s(i), s(j), t(i)], [t(j), s(i), s(j)], "3PR5", n))
    for i, j in _far_pairs(n):
        for g in (s, t, v):
            for h in (s, t, v):
                rels.append(relation([g(i), h(j)], [h(j), g(i)], "CR", n))
    return _dedupe(rels)


def quotient_relators(tag: str, n: int) -> list[Relator]:
    """Relation set (1)-(6) of the quotient diagram, tags Q1..Q6."""
    r = range(1, n - 1)
    if tag == "Q1":
        return [relation([v(i), s(i + 1), s(i)], [s(i + 1), s(i), v(i + 1)], tag, n) for i in r]
    if tag == "Q2":
        return [relation([v(i + 1), s(i), s(i + 1)], [s(i), s(i + 1), v(i)], tag, n) for i in r]
    if tag == "Q3":
        return [relation([v(i), t(i + 1), t(i)], [t(i + 1), t(i), v(i + 1)], tag, n) for i in r]
    if tag == "Q4":
        return [relation([v(i + 1), t(i), t(i + 1)], [t(i), t(i + 1), v(i)], tag, n) for i in r]
    if tag == "Q5":
        return [relation([(s(i), 2)], [], tag, n) for i in range(1, n)]
    if tag == "Q6":
        return [relation([s(i), v(i)], [v(i), s(i)], tag, n) for i in range(1, n)]
    raise PresentationError(f"unknown quotient relation {tag}")


@lru_cache(maxsize=256)
def build_presentation(family: str, n: int) -> Presentation:
    if n < 2:
        raise PresentationError("n must be >= 2")
    if family == "B":
        return Presentation("B", n, _braid_gens(n, "s"), tuple(_artin(n)))
    if family == "VB":
        return Presentation("VB", n, _braid_gens(n, "sv"), tuple(_vb(n)))
    if family == "SG":
        return Presentation("SG", n, _braid_gens(n, "st"), tuple(_sg(n)))
    if family not in QUOTIENT_RELATIONS:
        raise PresentationError(f"unknown family {family!r}")
    rels = _vsg(n)
    for tag in QUOTIENT_RELATIONS[family]:
        rels += quotient_relators(tag, n)
    return Presentation(family, n, _braid_gens(n, "stv"), tuple(_dedupe(rels)))


def relator_count(family: str, n: int) -> int:
    """Closed-form relator census for a registry family."""
    adj, far = n - 2, comb(n - 2, 2)
    if family == "B":
        return adj + far
    if family == "VB":
        return adj + far + adj + far + (n - 1) + 2 * far + adj
    if family == "SG":
        return adj + far + far + 2 * far + (n - 1) + 2 * adj
    if family not in QUOTIENT_RELATIONS:
        raise PresentationError(f"unknown family {family!r}")
    base = 2 * (n - 1) + 6 * adj + 9 * far
    extra = {"Q1": adj, "Q2": adj, "Q3": adj, "Q4": adj, "Q5": n - 1, "Q6": n - 1}
    return base + sum(extra[q] for q in QUOTIENT_RELATIONS[family])


def add_generator_relators(P: Presentation, gens: Iterable[Symbol], family: str | None = None) -> Presentation:
    """Quotient by the normal closure of some generators (adds relators g)."""
    return P.with_relators((Relator(Word.of([(g, 1)], P.strands if P.is_braid else None), "KILL") for g in gens),
                           family)


# relator moves ------------------------------------------------------------

def apply_relation(w: Word, r: Relator, position: int, direction: int = 1, rotation: int = 0) -> Word:
    """
    Insert the cyclic conjugate of r^direction starting at unit letter ``rotation``
    at unit position ``position`` of w, then freely reduce.
    """
    units = w.expand()
    if not 0 <= position <= len(units):
        raise PresentationError(f"invalid position {position} for word of length {len(units)}")
    rel = r.word if direction > 0 else word_invert(r.word)
    ru = rel.expand()
    if ru:
        k = rotation % len(ru)
        ru = ru[k:] + ru[:k]
    strands = w.strands if w.strands is not None else r.word.strands
    return Word.of(units[:position] + ru + units[position:], strands)


def random_word(gens: Sequence[Symbol], length: int, rng: random.Random, strands: int | None = None) -> Word:
    return Word.of([(rng.choice(gens), rng.choice((1, -1))) for _ in range(length)], strands)


# text format ---------------------------------------------------------------

def format_presentation(P: Presentation) -> str:
    lines = [f"group {P.family} n={P.strands}"]
    if P.family == "CUSTOM":
        lines += [f"gen {g}" for g in P.generators]
    for r in P.relators:
        line = f"rel {format_word(r.word)}"
        if r.tag:
            line += f"  # {r.tag}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    family, n, gens, rels = None, None, [], []
    for raw in text.splitlines():
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        key, _, rest = body.partition(" ")
        rest = rest.strip()
        if key == "group":
            fam, _, nn = rest.partition(" ")
            if not nn.startswith("n="):
                raise PresentationError(f"bad header {raw!r}")
            family, n = fam, int(nn[2:])
        elif key == "gen":
            gens.append(rest)
        elif key == "rel":
            rels.append((rest, comment.strip()))
        else:
            raise PresentationError(f"unknown line {raw!r}")
    if family is None:
        raise PresentationError("missing group header")
    if family == "CUSTOM":
        syms: tuple[Symbol, ...] = tuple(gens)
    else:
        if family not in REGISTRY:
            raise PresentationError(f"unknown family {family!r}")
        fams = {"B": "s", "VB": "sv", "SG": "st"}.get(family, "stv")
        syms = _braid_gens(n, fams)
    relators = []
    for text_w, tag in rels:
        if family == "CUSTOM":
            w = parse_abstract_word(text_w, syms)
        else:
            from .words import parse_word
            w = parse_word(text_w, n)
        relators.append(Relator(w, tag))
    return Presentation(family, n, syms, tuple(relators))
