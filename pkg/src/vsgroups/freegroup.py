"""
Automorphisms of free groups given by basis images.

Composition reads like word concatenation: ``aut_compose(f, g)`` is
"apply f, then apply g", i.e. x -> g(f(x)) as substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .words import Symbol, Word


def basis(k: int, extra: Sequence[str] = ()) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, k + 1)) + tuple(extra)


def fw(*letters) -> Word:
    """Free-group word from names and (name, exp) pairs."""
    return Word.of([x if isinstance(x, tuple) else (x, 1) for x in letters])


@dataclass(frozen=True)
class FreeGroupAutomorphism:
    basis: tuple[str, ...]
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.basis) != len(self.images):
            raise ValueError("one image per basis element required")
        allowed = set(self.basis)
        for w in self.images:
            if not w.symbols() <= allowed:
                raise ValueError(f"image {w} uses letters outside the basis")

    @classmethod
    def from_map(cls, basis: Sequence[str], images: Mapping[str, Word]) -> "FreeGroupAutomorphism":
        return cls(tuple(basis), tuple(images.get(x, fw(x)) for x in basis))

    @classmethod
    def identity(cls, basis: Sequence[str]) -> "FreeGroupAutomorphism":
        return cls(tuple(basis), tuple(fw(x) for x in basis))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def image(self, x: Symbol) -> Word:
        return self.images[self.basis.index(x)]

    def __str__(self) -> str:
        return ", ".join(f"{x}->{w}" for x, w in zip(self.basis, self.images))


def aut_apply(f: FreeGroupAutomorphism, w: Word) -> Word:
    table = dict(zip(f.basis, f.images))
    letters = []
    for sym, e in w:
        if sym not in table:
            raise ValueError(f"letter {sym!r} not in basis of rank {f.rank}")
        img = table[sym] if e > 0 else ~table[sym]
        letters.extend(img.letters * abs(e))
    return Word.of(letters)


def aut_compose(f: FreeGroupAutomorphism, g: FreeGroupAutomorphism) -> FreeGroupAutomorphism:
    if f.basis != g.basis:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    return FreeGroupAutomorphism(f.basis, tuple(aut_apply(g, w) for w in f.images))


def aut_equal(f: FreeGroupAutomorphism, g: FreeGroupAutomorphism) -> bool:
    if f.basis != g.basis:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    return f.images == g.images


def is_identity(f: FreeGroupAutomorphism) -> bool:
    return aut_equal(f, FreeGroupAutomorphism.identity(f.basis))


@dataclass(frozen=True)
class Automorphism:
    """An automorphism carried with its inverse; invertibility is checked on construction."""

    forward: FreeGroupAutomorphism
    backward: FreeGroupAutomorphism

    def __post_init__(self):
        if not (is_identity(aut_compose(self.forward, self.backward))
                and is_identity(aut_compose(self.backward, self.forward))):
            raise ValueError(f"{self.forward} is not inverted by {self.backward}")

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return Automorphism.__new_unchecked(aut_compose(self.forward, other.forward),
                                            aut_compose(other.backward, self.backward))

    def inverse(self) -> "Automorphism":
        return Automorphism.__new_unchecked(self.backward, self.forward)

    @classmethod
    def __new_unchecked(cls, fwd, bwd):
        obj = object.__new__(cls)
        object.__setattr__(obj, "forward", fwd)
        object.__setattr__(obj, "backward", bwd)
        return obj

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and aut_equal(self.forward, other.forward)

    def __hash__(self) -> int:
        return hash(self.forward)

    def __str__(self) -> str:
        return str(self.forward)
