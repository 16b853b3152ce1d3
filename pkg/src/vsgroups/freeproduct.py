"""
Free products of abelian and free factors with an alternating-syllable normal form.

Abelian factor elements are integer tuples (free coordinates first, then torsion
coordinates reduced into [0, d)). Free factor elements are reduced words over
``f1..fr``. Two words are equal in the free product iff their normal forms are
equal, which gives an exact word problem.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .words import Symbol, Word


@dataclass(frozen=True)
class Abelian:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion)

    def norm(self, x: Sequence[int]) -> tuple[int, ...]:
        r = self.free_rank
        return tuple(x[:r]) + tuple(c % d for c, d in zip(x[r:], self.torsion))

    def identity(self):
        return (0,) * self.dim

    def mul(self, a, b):
        return self.norm([x + y for x, y in zip(a, b)])

    def inv(self, a):
        return self.norm([-x for x in a])

    def power(self, a, k):
        return self.norm([k * x for x in a])

    def basis(self):
        return [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if len(parts) > 1 else (parts[0] if parts else "1")


@dataclass(frozen=True)
class Free:
    rank: int

    def letters(self):
        return [f"f{i}" for i in range(1, self.rank + 1)]

    def identity(self):
        return Word()

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return ~a

    def power(self, a, k):
        return a ** k

    def basis(self):
        return [Word.of([(x, 1)]) for x in self.letters()]

    def __str__(self) -> str:
        return f"F{self.rank}"


Factor = Union[Abelian, Free]


@dataclass(frozen=True)
class FactorSpec:
    factors: tuple[Factor, ...]

    def __str__(self) -> str:
        return " * ".join(str(f) for f in self.factors)

    def generators(self) -> list[tuple[int, object]]:
        """Standard generators as (factor index, factor element)."""
        return [(k, b) for k, f in enumerate(self.factors) for b in f.basis()]


_FACTOR = re.compile(r"^(?:Z(?:\^(\d+))?|Z_(\d+)|F(\d+))$")


def parse_factor_spec(text: str) -> FactorSpec:
    """Grammar: factor := "Z" ["^" int] | "Z_" int | "F" int, joined by "*"."""
    factors: list[Factor] = []
    for part in text.split("*"):
        m = _FACTOR.match(part.strip())
        if not m:
            raise ValueError(f"bad factor {part.strip()!r}")
        if m.group(3) is not None:
            factors.append(Free(int(m.group(3))))
        elif m.group(2) is not None:
            factors.append(Abelian(0, (int(m.group(2)),)))
        else:
            factors.append(Abelian(int(m.group(1) or 1)))
    return FactorSpec(tuple(factors))


@dataclass(frozen=True)
class FreeProductElement:
    syllables: tuple[tuple[int, object], ...] = ()

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " . ".join(f"[{k}:{_fmt(x)}]" for k, x in self.syllables)


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(map(str, x)) + ")"
    return str(x)


class FreeProductGroup:
    """Target-group wrapper around a FactorSpec."""

    def __init__(self, spec: FactorSpec):
        self.spec = spec

    def identity(self) -> FreeProductElement:
        return FreeProductElement()

    def _push(self, stack: list, k: int, x) -> None:
        f = self.spec.factors[k]
        if x == f.identity():
            return
        if stack and stack[-1][0] == k:
            y = f.mul(stack[-1][1], x)
            stack.pop()
            if y != f.identity():
                stack.append((k, y))
        else:
            stack.append((k, x))

    def mul(self, a: FreeProductElement, b: FreeProductElement) -> FreeProductElement:
        stack = list(a.syllables)
        for k, x in b.syllables:
            self._push(stack, k, x)
        return FreeProductElement(tuple(stack))

    def inv(self, a: FreeProductElement) -> FreeProductElement:
        return FreeProductElement(tuple((k, self.spec.factors[k].inv(x)) for k, x in reversed(a.syllables)))

    def eq(self, a, b) -> bool:
        return a == b

    def syllable(self, k: int, x) -> FreeProductElement:
        stack: list = []
        self._push(stack, k, self.spec.factors[k].norm(x) if isinstance(self.spec.factors[k], Abelian) else x)
        return FreeProductElement(tuple(stack))

    def render(self, a) -> str:
        return str(a)

    def random_element(self, rng: random.Random, syllables: int = 6, spread: int = 3) -> FreeProductElement:
        out = self.identity()
        for _ in range(syllables):
            k = rng.randrange(len(self.spec.factors))
            f = self.spec.factors[k]
            if isinstance(f, Abelian):
                x = f.norm([rng.randint(-spread, spread) for _ in range(f.dim)])
            else:
                x = Word.of([(rng.choice(f.letters()), rng.choice((1, -1))) for _ in range(rng.randint(1, spread))])
            out = self.mul(out, self.syllable(k, x))
        return out


def fp_normalize(w: Word, spec: FactorSpec, assignment: Mapping[Symbol, tuple[int, object]]) -> FreeProductElement:
    """Normal form of w when each generator is sent to an element of one factor."""
    G = FreeProductGroup(spec)
    stack: list = []
    for sym, e in w:
        if sym not in assignment:
            raise KeyError(f"unassigned generator {sym}")
        k, x = assignment[sym]
        G._push(stack, k, spec.factors[k].power(x, e))
    return FreeProductElement(tuple(stack))


def standard_generator_names(spec: FactorSpec) -> list[str]:
    """Names ``z<factor>_<j>`` for the standard generators, factors numbered from 1."""
    names = []
    for k, f in enumerate(spec.factors, 1):
        dim = f.dim if isinstance(f, Abelian) else f.rank
        names += [f"z{k}_{j}" for j in range(1, dim + 1)]
    return names


def standard_assignment(spec: FactorSpec) -> dict[str, tuple[int, object]]:
    return dict(zip(standard_generator_names(spec), spec.generators()))
