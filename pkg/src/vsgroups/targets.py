"""
Computable target groups.

Every target exposes ``identity()``, ``mul(a, b)``, ``inv(a)`` and ``eq(a, b)``;
finite ones also ``elements()``. ``render`` gives a short text form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence

from .freegroup import Automorphism, FreeGroupAutomorphism
from .perm import Permutation, all_permutations, transposition


class Group(Protocol):
    def identity(self): ...
    def mul(self, a, b): ...
    def inv(self, a): ...
    def eq(self, a, b) -> bool: ...


def power(G, a, k: int):
    base = a if k >= 0 else G.inv(a)
    out = G.identity()
    for _ in range(abs(k)):
        out = G.mul(out, base)
    return out


def render(G, a) -> str:
    return G.render(a) if hasattr(G, "render") else str(a)


class SymmetricGroup:
    def __init__(self, m: int):
        self.m = m

    def identity(self):
        return Permutation.identity(self.m)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def eq(self, a, b):
        return a == b

    def elements(self) -> list[Permutation]:
        return all_permutations(self.m)

    def adjacent(self, i: int) -> Permutation:
        return transposition(i, i + 1, self.m)

    def render(self, a) -> str:
        return a.cycle_str()

    def __str__(self):
        return f"S{self.m}"


@dataclass(frozen=True)
class ZxSnElement:
    shift: int
    perm: Permutation

    def __str__(self) -> str:
        return f"({self.shift}, {self.perm.cycle_str()})"


class ZxSn:
    def __init__(self, m: int):
        self.m = m

    def identity(self):
        return ZxSnElement(0, Permutation.identity(self.m))

    def mul(self, a, b):
        return ZxSnElement(a.shift + b.shift, a.perm * b.perm)

    def inv(self, a):
        return ZxSnElement(-a.shift, a.perm.inverse())

    def eq(self, a, b):
        return a == b

    def element(self, shift: int, perm: Permutation | None = None):
        return ZxSnElement(shift, perm or Permutation.identity(self.m))

    def render(self, a) -> str:
        return str(a)

    def __str__(self):
        return f"Z x S{self.m}"


class AbelianGroup:
    """Z^r + Z_d1 + ...; ``moduli`` uses 0 for a free coordinate."""

    def __init__(self, moduli: Sequence[int]):
        self.moduli = tuple(moduli)

    def norm(self, x):
        return tuple(c % d if d else c for c, d in zip(x, self.moduli))

    def identity(self):
        return (0,) * len(self.moduli)

    def mul(self, a, b):
        return self.norm([x + y for x, y in zip(a, b)])

    def inv(self, a):
        return self.norm([-x for x in a])

    def eq(self, a, b):
        return self.norm(a) == self.norm(b)

    def elements(self):
        if any(d == 0 for d in self.moduli):
            raise ValueError("infinite group")
        return [tuple(x) for x in itertools.product(*(range(d) for d in self.moduli))]

    def render(self, a) -> str:
        a = self.norm(a)
        return str(a[0]) if len(a) == 1 else "(" + ",".join(map(str, a)) + ")"

    def __str__(self):
        return " x ".join("Z" if d == 0 else f"Z_{d}" for d in self.moduli)


def integers() -> AbelianGroup:
    return AbelianGroup((0,))


def cyclic(k: int) -> AbelianGroup:
    return AbelianGroup((k,))


class AutGroup:
    """Aut(F) on a fixed basis; elements are ``Automorphism`` (forward, inverse) pairs."""

    def __init__(self, basis: Sequence[str]):
        self.basis = tuple(basis)

    def identity(self):
        e = FreeGroupAutomorphism.identity(self.basis)
        return Automorphism(e, e)

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inverse()

    def eq(self, a, b):
        return a == b

    def render(self, a) -> str:
        return str(a.forward)

    def __str__(self):
        return f"Aut(F{len(self.basis)})"


class FiniteGroup:
    """Finite group given by an explicit element list, with index-level multiplication table."""

    def __init__(self, G, name: str = ""):
        self.G = G
        self.els = list(G.elements())
        self.index = {x: i for i, x in enumerate(self.els)}
        self.table = [[self.index[G.mul(a, b)] for b in self.els] for a in self.els]
        self.inverse = [self.index[G.inv(a)] for a in self.els]
        self.id = self.index[G.identity()]
        self.name = name or str(G)

    def __len__(self):
        return len(self.els)

    def __str__(self):
        return self.name


def closure(G, gens: Iterable) -> list:
    """Elements of the subgroup generated by gens (finite groups only)."""
    gens = list(gens)
    seen = [G.identity()]
    frontier = list(seen)
    found = {seen[0]}
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in found:
                    found.add(y)
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    return seen
