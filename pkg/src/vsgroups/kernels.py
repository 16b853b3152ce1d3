"""
Kernel presentations of the phi-triple maps: the Reidemeister-Schreier pipeline,
reference presentations for n = 2 and identification fixtures between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homs import GeneratorMap, eval_hom, format_triple, parse_triple, phi_triple, verify_homomorphism
from .iso import IsoCertificate, IsoReport, fingerprint, free_product_presentation, verify_iso
from .lcs import AbelianInvariants, abelianization
from .presentations import Presentation, build_presentation, custom, format_presentation
from .schreier import (
    CosetTable, RewrittenPresentation, SchreierGenerator, coset_table_from_hom, rewrite_relators,
    schreier_generators,
)
from .tietze import TietzeTrace, tietze_simplify
from .words import Word, format_word, parse_word


@dataclass
class KernelResult:
    triple: tuple[int, int, int]
    table: CosetTable
    generators: list[SchreierGenerator]
    rewritten: RewrittenPresentation
    presentation: Presentation
    trace: TietzeTrace

    @property
    def definitions(self) -> dict[str, Word]:
        """Surviving generators as words in the parent group."""
        return {g.name: g.word for g in self.generators if g.name in set(map(str, self.presentation.generators))}

    def header(self) -> str:
        lam = ", ".join(format_word(w) if w.letters else "1" for w in self.table.transversal)
        return f"# transversal: {{{lam}}}\n# tietze: {self.trace.summary()}\n"

    def text(self) -> str:
        defs = "".join(f"# {k} = {format_word(w)}\n" for k, w in self.definitions.items())
        return self.header() + defs + format_presentation(self.presentation)


def kernel_pipeline(family: str, n: int, triple, budget: int = 10_000) -> KernelResult:
    triple = parse_triple(triple)
    P = build_presentation(family, n)
    m = phi_triple(P, n, *triple)
    t = coset_table_from_hom(m)
    sg = schreier_generators(t, P)
    rw = rewrite_relators(t, P, sg)
    name = f"Ker phi_{format_triple(triple)} in {family}_{n}"
    if triple == (0, 0, 0):
        return KernelResult(triple, t, sg, rw, P, TietzeTrace())
    Q, trace = tietze_simplify(rw.presentation(name), budget)
    return KernelResult(triple, t, sg, rw, Q, trace)


def kernel_presentation(family: str, n: int, triple, budget: int = 10_000) -> Presentation:
    return kernel_pipeline(family, n, triple, budget).presentation


# reference presentations at n = 2 ------------------------------------------------------

@dataclass(frozen=True)
class Reference:
    generators: tuple[str, ...]
    relations: tuple
    definitions: dict = field(default_factory=dict, compare=False)
    structure: str = ""

    def presentation(self, name: str = "") -> Presentation:
        return custom(self.generators, self.relations, name=name)


# reference generator names: a12 = s1 v1, A12 = s1^2, a = s1 v1 s1^-1, T = t1^2, ...
REFERENCE = {
    "111": Reference(("a12", "b12", "c12"), (("a12 c12 b12", "b12 c12 a12"),),
                     {"a12": "s1 v1", "b12": "t1 v1", "c12": "v1 s1"}, "Z^2 * Z"),
    "110": Reference(("A12", "e12", "v1", "a"), ("v1^2", "a^2"),
                     {"A12": "s1^2", "e12": "s1 t1", "v1": "v1", "a": "s1 v1 s1^-1"}, "F2 * Z_2 * Z_2"),
    "101": Reference(("a12", "c12", "t1"), (("a12 c12 t1", "t1 a12 c12"),),
                     {"a12": "s1 v1", "c12": "v1 s1", "t1": "t1"}, "Z^2 * Z"),
    "100": Reference(("A12", "t1", "v1", "a"), ("v1^2", "a^2", ("A12 t1", "t1 A12")),
                     {"A12": "s1^2", "t1": "t1", "v1": "v1", "a": "s1 v1 s1^-1"}, "Z^2 * Z_2 * Z_2"),
    "011": Reference(("b12", "d12", "s1"), (("b12 d12 s1", "s1 b12 d12"),),
                     {"b12": "t1 v1", "d12": "v1 t1", "s1": "s1"}, "Z^2 * Z"),
    "010": Reference(("s1", "T", "v1", "b"), ("v1^2", "b^2", ("s1 T", "T s1")),
                     {"s1": "s1", "T": "t1^2", "v1": "v1", "b": "t1 v1 t1^-1"}, "Z^2 * Z_2 * Z_2"),
    "001": Reference(("s1", "t1", "c", "d"), (("s1 t1", "t1 s1"), ("c d", "d c")),
                     {"s1": "s1", "t1": "t1", "c": "v1 s1 v1^-1", "d": "v1 t1 v1^-1"}, "Z^2 * Z^2"),
    "000": Reference(("s1", "t1", "v1"), ("v1^2", ("s1 t1", "t1 s1")),
                     {"s1": "s1", "t1": "t1", "v1": "v1"}, "Z^2 * Z_2"),
}

# the (1,1,0) kernel as computed: the reference relations plus [A12, e12]
DERIVED_110 = Reference(("A12", "e12", "v1", "a"), ("v1^2", "a^2", ("A12 e12", "e12 A12")),
                        REFERENCE["110"].definitions, "Z^2 * Z_2 * Z_2")


def reference_presentation(triple) -> Presentation:
    key = format_triple(parse_triple(triple))
    if key == "000":
        return build_presentation("VSG", 2)
    return REFERENCE[key].presentation(f"reference kernel {key}")


# identification fixtures: pipeline generator -> reference word, reference generator -> pipeline word.
# Derived by expressing each Schreier generator through the reference generators in VSG_2.
FIXTURES = {
    "111": ({"s1_1": "a12", "t1_1": "b12", "s1_v1": "c12"},
            {"a12": "s1_1", "b12": "t1_1", "c12": "s1_v1"}),
    "110": ({"t1_1": "e12 A12^-1", "v1_1": "v1", "s1_s1": "A12", "v1_s1": "a"},
            {"A12": "s1_s1", "e12": "t1_1 s1_s1", "v1": "v1_1", "a": "v1_s1"}),
    "101": ({"s1_1": "a12", "t1_1": "t1", "s1_v1": "c12"},
            {"a12": "s1_1", "c12": "s1_v1", "t1": "t1_1"}),
    "100": ({"t1_1": "t1", "v1_1": "v1", "s1_s1": "A12", "v1_s1": "a"},
            {"A12": "s1_s1", "t1": "t1_1", "v1": "v1_1", "a": "v1_s1"}),
    "011": ({"s1_1": "s1", "t1_1": "b12", "t1_v1": "d12"},
            {"b12": "t1_1", "d12": "t1_v1", "s1": "s1_1"}),
    "010": ({"s1_1": "s1", "v1_1": "v1", "t1_t1": "T", "v1_t1": "b"},
            {"s1": "s1_1", "T": "t1_t1", "v1": "v1_1", "b": "v1_t1"}),
    "001": ({"s1_1": "s1", "t1_1": "t1", "s1_v1": "c", "t1_v1": "d"},
            {"s1": "s1_1", "t1": "t1_1", "c": "s1_v1", "d": "t1_v1"}),
    "000": ({"s1": "s1", "t1": "t1", "v1": "v1"}, {"s1": "s1", "t1": "t1", "v1": "v1"}),
}


@dataclass
class KernelCheck:
    triple: str
    pipeline: Presentation
    reference: Presentation
    certified: IsoReport
    compared_with: str               # "reference" or "derived"
    abelianization: AbelianInvariants
    fingerprint: dict[str, int]
    reference_fingerprint: dict[str, int]
    discrepancy: str = ""

    @property
    def ok(self) -> bool:
        return self.certified.valid


def _as_custom(P: Presentation) -> Presentation:
    """VSG_2 with string generator names, for certificates against the pipeline output."""
    return custom([str(g) for g in P.generators], [format_word(r.word) for r in P.relators], name=P.name)


def check_kernel(triple) -> KernelCheck:
    key = format_triple(parse_triple(triple))
    res = kernel_pipeline("VSG", 2, key)
    out = res.presentation if key != "000" else _as_custom(res.presentation)
    compared = "reference"
    ref = reference_presentation(key) if key != "000" else _as_custom(build_presentation("VSG", 2))
    discrepancy = ""
    if key == "110":
        compared = "derived"
        ref = DERIVED_110.presentation("derived kernel 110")
    m12, m21 = FIXTURES[key]
    report = verify_iso(IsoCertificate(out, ref, m12, m21))
    fp = fingerprint(out)
    ref_fp = fingerprint(reference_presentation(key)) if key != "000" else fp
    if key == "110":
        given = reference_presentation(key)
        discrepancy = (f"reference relations omit [A12, e12]; computed {abelianization(out)} "
                       f"vs reference {abelianization(given)}, S3/S4 counts {fp} vs {ref_fp}")
    return KernelCheck(key, out, ref, report, compared, abelianization(out), fp, ref_fp, discrepancy)


def definitions_consistent(triple) -> bool:
    """Each fixture image, expanded through the reference definitions, equals the Schreier generator in VSG_2."""
    from .structure import vsg2_engine
    key = format_triple(parse_triple(triple))
    if key == "000":
        return True
    res = kernel_pipeline("VSG", 2, key)
    ref = DERIVED_110 if key == "110" else REFERENCE[key]
    defs = {k: parse_word(w, 2) for k, w in ref.definitions.items()}
    eng = vsg2_engine()
    m12, _ = FIXTURES[key]
    for name, wdef in res.definitions.items():
        img = Word.of([], 2)
        for tok in m12[name].split():
            sym, _, e = tok.partition("^")
            img = img * (defs[sym] ** int(e or 1))
        if not eng.decide(wdef * ~img):
            return False
    return True


def kernel_membership(triple) -> bool:
    """Every reference generator, read in VSG_2, lies in the kernel of the defining map."""
    key = format_triple(parse_triple(triple))
    m = phi_triple("VSG", 2, *parse_triple(key))
    ref = REFERENCE[key]
    return all(eval_hom(m, parse_word(w, 2)).is_identity() for w in ref.definitions.values()) if key != "000" else True
