"""
Braid generators and free-group words.

A word is a tuple of letters (symbol, exponent). Symbols are either braid
generators ``Gen(family, index)`` (written s1, t2, v3 in text) or plain
strings naming abstract generators (kernel presentations, free factors,
free-group bases). The free-word layer never uses any group relation: in
particular ``v1^-1`` and ``v1^2`` are kept as they are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, NamedTuple, Sequence, Union


class Family(IntEnum):
    CLASSICAL = 0
    SINGULAR = 1
    VIRTUAL = 2

    @property
    def letter(self) -> str:
        return "stv"[self]


@dataclass(frozen=True, order=True)
class Gen:
    family: Family
    index: int

    def __str__(self) -> str:
        return f"{self.family.letter}{self.index}"

    def __repr__(self) -> str:
        return str(self)


def s(i: int) -> Gen:
    return Gen(Family.CLASSICAL, i)


def t(i: int) -> Gen:
    return Gen(Family.SINGULAR, i)


def v(i: int) -> Gen:
    return Gen(Family.VIRTUAL, i)


Symbol = Union[Gen, str]


class Letter(NamedTuple):
    symbol: Symbol
    exp: int


class WordError(ValueError):
    pass


def _merge(letters: Iterable[tuple[Symbol, int]]) -> list[Letter]:
    out: list[Letter] = []
    for sym, e in letters:
        if e == 0:
            continue
        if out and out[-1].symbol == sym:
            total = out[-1].exp + e
            out.pop()
            if total:
                out.append(Letter(sym, total))
        else:
            out.append(Letter(sym, e))
    return out


@dataclass(frozen=True)
class Word:
    """Immutable word. ``strands`` is None for words over abstract symbols."""

    letters: tuple[Letter, ...] = ()
    strands: int | None = None

    def __post_init__(self):
        if self.strands is not None:
            for sym, e in self.letters:
                if not isinstance(sym, Gen):
                    raise WordError(f"abstract symbol {sym!r} in a braid word")
                if not 1 <= sym.index < self.strands:
                    raise WordError(f"{sym} out of range for n={self.strands}")
        for _, e in self.letters:
            if e == 0:
                raise WordError("zero exponent")

    @classmethod
    def of(cls, letters: Iterable[tuple[Symbol, int]], strands: int | None = None) -> "Word":
        """Build a freely reduced word."""
        return cls(tuple(_merge(letters)), strands)

    @classmethod
    def raw(cls, letters: Iterable[tuple[Symbol, int]], strands: int | None = None) -> "Word":
        return cls(tuple(Letter(a, e) for a, e in letters), strands)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return word_concat(self, other)

    def __invert__(self) -> "Word":
        return word_invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else ~self
        return Word.of([x for _ in range(abs(k)) for x in base.letters], self.strands)

    def __str__(self) -> str:
        return format_word(self)

    def expand(self) -> list[tuple[Symbol, int]]:
        """Unit letters: each (symbol, +-1)."""
        out = []
        for sym, e in self.letters:
            sign = 1 if e > 0 else -1
            out.extend([(sym, sign)] * abs(e))
        return out

    def symbols(self) -> set[Symbol]:
        return {sym for sym, _ in self.letters}

    def is_reduced(self) -> bool:
        return all(a.symbol != b.symbol for a, b in zip(self.letters, self.letters[1:]))


def _check_strands(a: Word, b: Word) -> int | None:
    if a.strands != b.strands and a.letters and b.letters:
        raise WordError(f"strand mismatch: {a.strands} vs {b.strands}")
    return a.strands if a.strands is not None else b.strands


def free_reduce(w: Word) -> Word:
    return Word(tuple(_merge(w.letters)), w.strands)


def word_concat(a: Word, b: Word) -> Word:
    n = _check_strands(a, b)
    return Word(tuple(_merge(a.letters + b.letters)), n)


def word_invert(a: Word) -> Word:
    return Word(tuple(Letter(sym, -e) for sym, e in reversed(a.letters)), a.strands)


def cyclic_reduce(w: Word) -> Word:
    letters = _merge(w.letters)
    while len(letters) >= 2 and letters[0].symbol == letters[-1].symbol:
        first, last = letters[0], letters.pop()
        total = first.exp + last.exp
        if total:
            letters[0] = Letter(first.symbol, total)
        else:
            letters.pop(0)
    return Word(tuple(letters), w.strands)


def cyclic_rotations(w: Word) -> list[Word]:
    """All cyclic conjugates of a cyclically reduced word, at unit-letter granularity."""
    units = w.expand()
    return [Word.of(units[k:] + units[:k], w.strands) for k in range(max(len(units), 1))]


def cyclic_key(w: Word) -> tuple:
    """Canonical key identifying a relator up to rotation and inversion."""
    w = cyclic_reduce(w)
    cands = []
    for x in (w, word_invert(w)):
        for r in cyclic_rotations(x):
            cands.append(tuple((str(sym), e) for sym, e in r.expand()))
    return min(cands)


def subword(w: Word, start: int, stop: int) -> Word:
    """Slice on unit letters."""
    return Word.of(w.expand()[start:stop], w.strands)


# text form -------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")
_BRAID = re.compile(r"^([stv])(\d+)$")


def parse_symbol(name: str, strands: int | None) -> Gen:
    m = _BRAID.match(name)
    if not m:
        raise WordError(f"malformed braid generator {name!r}")
    fam = Family("stv".index(m.group(1)))
    i = int(m.group(2))
    if strands is not None and not 1 <= i <= strands - 1:
        raise WordError(f"index {i} out of range [1, {strands - 1}]")
    return Gen(fam, i)


def _tokens(text: str) -> list[tuple[str, int]]:
    text = text.strip()
    if text in ("", "e"):
        return []
    out = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise WordError(f"malformed token {tok!r}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e == 0:
            raise WordError(f"zero exponent in {tok!r}")
        out.append((m.group(1), e))
    return out


def parse_word(text: str, strands: int) -> Word:
    """Parse ``"s1 t2^-1 v3"`` into a freely reduced braid word."""
    letters = [(parse_symbol(name, strands), e) for name, e in _tokens(text)]
    return Word.of(letters, strands)


def parse_abstract_word(text: str, names: Sequence[Symbol]) -> Word:
    """Parse a word over declared generator names (strings or braid symbols)."""
    table = {str(g): g for g in names}
    letters = []
    for name, e in _tokens(text):
        if name not in table:
            raise WordError(f"unknown generator {name!r}")
        letters.append((table[name], e))
    return Word.of(letters, None)


def format_word(w: Word) -> str:
    if not w.letters:
        return "e"
    return " ".join(f"{sym}" if e == 1 else f"{sym}^{e}" for sym, e in w.letters)


def word(*letters: tuple[Symbol, int] | Symbol, strands: int | None = None) -> Word:
    """Shorthand: ``word(s(1), (t(2), -1), strands=3)``."""
    items = [x if isinstance(x, tuple) else (x, 1) for x in letters]
    return Word.of(items, strands)
