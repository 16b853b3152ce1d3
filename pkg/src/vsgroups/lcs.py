"""
Abelianization and the class-2 quotient Gamma_2 / Gamma_3 of a finitely presented group.

The class-2 computation works in the free nilpotent group of class 2 on the
presentation generators: elements are pairs (a, b) with a in Z^k and b in Z^K,
K = k(k-1)/2, indexed by basic commutators [g_j, g_i] with j > i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .presentations import Presentation
from .snf import cokernel_invariants, smith_normal_form
from .words import Word


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = self.torsion
        if any(d <= 1 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain of entries > 1")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def parse_invariants(text: str) -> AbelianInvariants:
    text = text.strip()
    if text in ("0", "1", ""):
        return AbelianInvariants(0)
    rank, tors = 0, []
    for part in text.split("+"):
        part = part.strip()
        m = re.fullmatch(r"Z(?:\^(\d+))?|Z_(\d+)", part)
        if not m:
            raise ValueError(f"bad invariant term {part!r}")
        if m.group(2):
            tors.append(int(m.group(2)))
        else:
            rank += int(m.group(1) or 1)
    return AbelianInvariants(rank, tuple(tors))


def invariants_from_rows(rows: Sequence[Sequence[int]], cols: int) -> AbelianInvariants:
    free, tors = cokernel_invariants(rows, cols)
    return AbelianInvariants(free, tuple(tors))


def exponent_matrix(P: Presentation) -> list[list[int]]:
    idx = {g: i for i, g in enumerate(P.generators)}
    rows = []
    for r in P.relators:
        row = [0] * len(idx)
        for sym, e in r.word:
            row[idx[sym]] += e
        rows.append(row)
    return rows


def abelianization(P: Presentation) -> AbelianInvariants:
    return invariants_from_rows(exponent_matrix(P), len(P.generators))


# free class-2 nilpotent group ----------------------------------------------------

def commutator_pairs(k: int) -> list[tuple[int, int]]:
    """Basic commutators [g_j, g_i], j > i, as 0-based (j, i), lexicographic."""
    return [(j, i) for j in range(k) for i in range(j)]


class Class2:
    def __init__(self, k: int):
        self.k = k
        self.pairs = commutator_pairs(k)
        self.index = {p: n for n, p in enumerate(self.pairs)}
        self.K = len(self.pairs)

    def identity(self):
        return (0,) * self.k, (0,) * self.K

    def gen(self, i: int):
        return tuple(int(j == i) for j in range(self.k)), (0,) * self.K

    def lam(self, a, a2) -> list[int]:
        return [a[j] * a2[i] for j, i in self.pairs]

    def mul(self, x, y):
        (a, b), (a2, b2) = x, y
        L = self.lam(a, a2)
        return (tuple(p + q for p, q in zip(a, a2)),
                tuple(p + q + c for p, q, c in zip(b, b2, L)))

    def inv(self, x):
        a, b = x
        L = self.lam(a, a)
        return tuple(-p for p in a), tuple(-q + c for q, c in zip(b, L))

    def power(self, x, n: int):
        if n < 0:
            return self.power(self.inv(x), -n)
        a, b = x
        L = self.lam(a, a)
        c = n * (n - 1) // 2
        return tuple(n * p for p in a), tuple(n * q + c * l for q, l in zip(b, L))

    def bracket(self, a, e_i: int) -> list[int]:
        """Central part of the commutator of an element with abelian part a and g_i."""
        out = [0] * self.K
        for j, aj in enumerate(a):
            if aj and j != e_i:
                if j > e_i:
                    out[self.index[(j, e_i)]] += aj
                else:
                    out[self.index[(e_i, j)]] -= aj
        return out


def eval_class2(w: Word, k: int, generators: Sequence | None = None):
    """Image of w in the free class-2 nilpotent group on k generators (indices 1..k or ``generators``)."""
    N = Class2(k)
    idx = {g: i for i, g in enumerate(generators)} if generators is not None else None
    x = N.identity()
    for sym, e in w:
        i = idx[sym] if idx is not None else int(sym) - 1
        x = N.mul(x, N.power(N.gen(i), e))
    return x


@dataclass
class Class2Quotient:
    k: int
    abelianization: AbelianInvariants
    gamma2_mod_gamma3: AbelianInvariants
    relator_vectors: list = field(repr=False, default_factory=list)
    bracket_rows: list = field(repr=False, default_factory=list)
    kernel_rows: list = field(repr=False, default_factory=list)
    consistent: bool = True


def _integer_kernel(rows: list[list[int]], cols: int) -> list[list[int]]:
    """Basis of {n : n . rows = 0} (left kernel) via the SNF row transform."""
    if not rows:
        return []
    snf = smith_normal_form(rows, cols)
    return [snf.U[i] for i in range(snf.rank, len(rows))]


def class2_quotient(P: Presentation) -> Class2Quotient:
    """
    Gamma_2/Gamma_3 as Z^K modulo the central part of the normal closure of the relators.

    The central part is spanned by the brackets (a_r, g_i) and by the central
    components of the products prod_r x_r^{n_r} over the integer relations
    sum n_r a_r = 0; the latter is additive modulo the brackets.
    """
    k = len(P.generators)
    N = Class2(k)
    xs = [eval_class2(r.word, k, P.generators) for r in P.relators]
    A = [list(a) for a, _ in xs]
    brackets = [N.bracket(a, i) for a in A for i in range(k)]
    kernel = _integer_kernel(A, k)
    central = []
    for nvec in kernel:
        x = N.identity()
        for coeff, xr in zip(nvec, xs):
            if coeff:
                x = N.mul(x, N.power(xr, coeff))
        assert not any(x[0])
        central.append(list(x[1]))
    rows = [r for r in brackets + central if any(r)]
    g2 = invariants_from_rows(rows, N.K) if N.K else AbelianInvariants(0)
    ab = invariants_from_rows(A, k)
    direct = abelianization(P)
    return Class2Quotient(k, ab, g2, xs, brackets, central, ab == direct)


def gamma2_mod_gamma3(P: Presentation) -> AbelianInvariants:
    return class2_quotient(P).gamma2_mod_gamma3
