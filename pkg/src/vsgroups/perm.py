"""Permutations in one-line notation, composed left to right: (p*q)(x) = q(p(x))."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .words import Symbol, Word


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return perm_compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def inversions(self) -> int:
        a = self.images
        return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])

    def sign(self) -> int:
        return -1 if self.inversions() % 2 else 1

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def cycle_str(self) -> str:
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(q.images[x - 1] for x in p.images))


def transposition(i: int, j: int, m: int) -> Permutation:
    a = list(range(1, m + 1))
    a[i - 1], a[j - 1] = a[j - 1], a[i - 1]
    return Permutation(tuple(a))


def from_cycles(cycles: Iterable[Iterable[int]], m: int) -> Permutation:
    a = list(range(1, m + 1))
    for cyc in cycles:
        c = list(cyc)
        for x, y in zip(c, c[1:] + c[:1]):
            a[x - 1] = y
    return Permutation(tuple(a))


def parse_perm(text: str, m: int | None = None) -> Permutation:
    """Accepts one-line ``[3,1,2]`` or cycle notation ``(1 3 2)(4 5)``."""
    text = text.strip()
    if text.startswith("["):
        return Permutation(tuple(int(x) for x in text.strip("[]").split(",") if x.strip()))
    cycles = [tuple(int(x) for x in c.replace(",", " ").split()) for c in re.findall(r"\(([^)]*)\)", text)]
    if m is None:
        m = max((x for c in cycles for x in c), default=1)
    return from_cycles(cycles, m)


def perm_from_word(w: Word, images: Mapping[Symbol, Permutation] | Callable[[Symbol], Permutation],
                   m: int | None = None) -> Permutation:
    """Evaluate a word letter by letter, left to right."""
    get = images if callable(images) else images.__getitem__
    out = None if m is None else Permutation.identity(m)
    for sym, e in w:
        p = get(sym) ** e
        out = p if out is None else out * p
    if out is None:
        raise ValueError("degree unknown for the empty word")
    return out


def all_permutations(m: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, m + 1))]


def adjacent_word(p: Permutation) -> list[int]:
    """
    Indices i1..ik with p = s_i1 * ... * s_ik (s_i = (i i+1)) and k = inversions(p).
    Bubble-sort: peel off the smallest descent on the left each time.
    """
    q = list(p.images)
    out = []
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                out.append(i + 1)
                q[i], q[i + 1] = q[i + 1], q[i]
                break
        else:
            return out
