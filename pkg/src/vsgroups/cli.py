"""
Command-line front end.

    vsgroups exp "s1 t2^-1 v1" --n 3
    vsgroups classify-triples --family VSG --n 3
    vsgroups kernel-presentation --n 2 --triple 110
    vsgroups suite --seed 7

Exit status: 0 on success, 1 when a verification fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable

from .acceptance import CRITERIA, AcceptanceConfig, run_criterion
from .homs import (
    HomError, classify_triples, exponent_map, exponent_sums, format_triple, parse_triple, phi_triple, psi_map,
    verify_homomorphism,
)
from .iso import fingerprint, parse_certificate, verify_iso
from .kernels import kernel_pipeline
from .lcs import abelianization, gamma2_mod_gamma3
from .presentations import REGISTRY, PresentationError, build_presentation, parse_presentation
from .structure import builtin_representation, decompose, forbidden_check, format_nf2, nf2
from .targets import render
from .words import WordError, format_word, parse_word

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    family: str = "VSG"
    n: int | None = None
    triple: str | None = None
    words: list[str] = field(default_factory=list)
    format: str = "text"
    seed: int = AcceptanceConfig.seed
    budget: int | None = None
    extra: dict = field(default_factory=dict)


class Output:
    """Text lines or one JSON record per line, depending on --format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, text: str, **record):
        if self.fmt == "json-lines":
            self.stream.write(json.dumps(record or {"text": text}, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _strands(cfg: CliConfig, text: str = "") -> int:
    if cfg.n is not None:
        return cfg.n
    # smallest n that accommodates every index in the word
    idx = [int(tok.split("^")[0][1:]) for tok in text.split() if tok[:1] in "stv" and tok.split("^")[0][1:].isdigit()]
    return max(idx, default=1) + 1


def _need_n(cfg: CliConfig) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.subcommand} needs --n")
    return cfg.n


def _one_word(cfg: CliConfig):
    if len(cfg.words) != 1:
        raise UsageError(f"{cfg.subcommand} takes exactly one word")
    n = _strands(cfg, cfg.words[0])
    return parse_word(cfg.words[0], n), n


# subcommands -----------------------------------------------------------------

def cmd_exp(cfg, out):
    w, _ = _one_word(cfg)
    d = exponent_sums(w)
    out.emit(str(d), expC=d.exp_c, expS=d.exp_s, expCS=d.exp_cs, parity=d.parity)
    return OK


def cmd_perm(cfg, out):
    w, n = _one_word(cfg)
    triple = parse_triple(cfg.triple or "111")
    m = phi_triple(cfg.family, n, *triple)
    p = m(w)
    out.emit(p.cycle_str(), triple=format_triple(triple), cycles=p.cycle_str(), images=list(p.images))
    return OK


def cmd_decompose(cfg, out):
    w, n = _one_word(cfg)
    triple = parse_triple(cfg.triple or "111")
    r = decompose(w, triple, n)
    pure, sec = format_word(r.pure), format_word(r.section_word)
    out.emit(f"pure={pure} perm={r.perm.cycle_str()} section={sec}",
             triple=format_triple(triple), pure=pure, perm=r.perm.cycle_str(), section=sec)
    return OK


def cmd_classify(cfg, out):
    n = _need_n(cfg)
    got = ",".join(sorted(format_triple(x) for x in classify_triples(cfg.family, n)))
    out.emit(got, family=cfg.family, n=n, triples=got.split(","))
    return OK


MAPS = ("phi", "psi", "expC", "expS", "expCS", "welded", "extended")


def cmd_verify_hom(cfg, out):
    n = _need_n(cfg)
    kind = cfg.extra.get("map") or "phi"
    if kind == "phi":
        if cfg.triple is None:
            raise UsageError("verify-hom --map phi needs --triple")
        m = phi_triple(cfg.family, n, *parse_triple(cfg.triple))
        kind = f"phi_{format_triple(parse_triple(cfg.triple))}"
    elif kind == "psi":
        m = psi_map(n, cfg.family)
    elif kind.startswith("exp"):
        m = exponent_map(kind[3:], n, cfg.family)
    else:
        m = builtin_representation(kind, n, cfg.family)
    rep = verify_homomorphism(m)
    for rel, a, b in rep.failures:
        out.emit(f"fails {rel}: {render(m.target, a)} != {render(m.target, b)}",
                 relator=str(rel), lhs=render(m.target, a), rhs=render(m.target, b))
    verdict = "true" if rep.is_homomorphism else "false"
    out.emit(f"map={kind} family={cfg.family} n={n} homomorphism={verdict}",
             map=kind, family=cfg.family, n=n, homomorphism=rep.is_homomorphism)
    return OK if rep.is_homomorphism else FAILED


def cmd_kernel(cfg, out):
    n = _need_n(cfg)
    if cfg.triple is None:
        raise UsageError("kernel-presentation needs --triple")
    res = kernel_pipeline(cfg.family, n, cfg.triple, cfg.budget or 10_000)
    if out.fmt == "json-lines":
        P = res.presentation
        out.emit("", triple=format_triple(res.triple), generators=[str(g) for g in P.generators],
                 relators=[format_word(r.word) for r in P.relators],
                 definitions={k: format_word(w) for k, w in res.definitions.items()},
                 transversal=[format_word(w) for w in res.table.transversal], tietze=res.trace.summary())
    else:
        out.stream.write(res.text())
    return OK


def _presentation(cfg):
    path = cfg.extra.get("presentation")
    if path:
        return parse_presentation(Path(path).read_text())
    return build_presentation(cfg.family, _need_n(cfg))


def cmd_abelianize(cfg, out):
    P = _presentation(cfg)
    a = abelianization(P)
    out.emit(str(a), free_rank=a.free_rank, torsion=list(a.torsion))
    return OK


def cmd_lcs2(cfg, out):
    P = _presentation(cfg)
    a = gamma2_mod_gamma3(P)
    out.emit(str(a), free_rank=a.free_rank, torsion=list(a.torsion))
    return OK


def cmd_forbidden(cfg, out):
    n = _need_n(cfg)
    if n < 3:
        raise UsageError("forbidden needs --n >= 3")
    ok = True
    for i in range(1, n - 1):
        for rel in (1, 2, 3, 4):
            r = forbidden_check(n, rel, i)
            ok &= r.separated
            out.emit(r.row(), relation=r.relation, i=r.index, n=n, separator=r.separator,
                     lhs=r.lhs_image, rhs=r.rhs_image, separated=r.separated)
    return OK if ok else FAILED


def cmd_nf2(cfg, out):
    if cfg.n not in (None, 2):
        raise UsageError("nf2 works in VSG_2 only")
    cfg = replace(cfg, n=2)
    w, _ = _one_word(cfg)
    text = format_nf2(nf2(w))
    out.emit(text, normal_form=text)
    return OK


def cmd_homcount(cfg, out):
    targets = tuple((cfg.extra.get("targets") or "S3,S4").split(","))
    if cfg.triple is not None:
        P = kernel_pipeline(cfg.family, _need_n(cfg), cfg.triple).presentation
    else:
        P = _presentation(cfg)
    counts = fingerprint(P, targets)
    out.emit(" ".join(f"{k}={v}" for k, v in counts.items()), **counts)
    return OK


def cmd_verify_iso(cfg, out):
    if len(cfg.words) != 1:
        raise UsageError("verify-iso takes one certificate file")
    cert = parse_certificate(Path(cfg.words[0]).read_text())
    rep = verify_iso(cert)
    for f in rep.failures:
        out.emit(f"failed {f}", failure=str(f))
    out.emit(f"valid={str(rep.valid).lower()} checks={rep.checks}", valid=rep.valid, checks=rep.checks)
    return OK if rep.valid else FAILED


def _suite_item(args):
    i, acfg = args
    return run_criterion(i, acfg)


def cmd_suite(cfg, out):
    acfg = AcceptanceConfig(seed=cfg.seed)
    only = cfg.extra.get("only")
    indices = sorted({int(x) for x in only.split(",")}) if only else list(range(1, len(CRITERIA) + 1))
    if any(not 1 <= i <= len(CRITERIA) for i in indices):
        raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    jobs = cfg.extra.get("jobs") or 1
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_suite_item, [(i, acfg) for i in indices]))
    else:
        results = [run_criterion(i, acfg) for i in indices]
    for r in results:   # index order whatever the completion order
        out.emit(r.line(), index=r.index, name=r.name, passed=r.passed, detail=r.detail)
    n_ok = sum(r.passed for r in results)
    out.emit(f"{n_ok}/{len(results)} criteria passed", passed=n_ok, total=len(results))
    return OK if n_ok == len(results) else FAILED


COMMANDS: dict[str, tuple[Callable, str]] = {
    "exp": (cmd_exp, "exponent sums of a word"),
    "perm": (cmd_perm, "permutation image of a word (phi_111 by default)"),
    "decompose": (cmd_decompose, "pure part and permutation of a word"),
    "classify-triples": (cmd_classify, "triples giving homomorphisms to S_n"),
    "verify-hom": (cmd_verify_hom, "check a built-in map relator by relator"),
    "kernel-presentation": (cmd_kernel, "Reidemeister-Schreier presentation of a kernel"),
    "abelianize": (cmd_abelianize, "abelian invariants"),
    "lcs2": (cmd_lcs2, "invariants of gamma_2 / gamma_3"),
    "forbidden": (cmd_forbidden, "separate the forbidden relations"),
    "nf2": (cmd_nf2, "normal form in VSG_2"),
    "homcount": (cmd_homcount, "homomorphism counts into small symmetric groups"),
    "verify-iso": (cmd_verify_iso, "validate an isomorphism certificate file"),
    "suite": (cmd_suite, "run the acceptance battery"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="VSG", choices=REGISTRY)
    common.add_argument("--n", type=int)
    common.add_argument("--triple")
    common.add_argument("--format", default="text", choices=("text", "json-lines"))
    common.add_argument("--seed", type=int, default=AcceptanceConfig.seed)
    common.add_argument("--budget", type=int)

    parser = argparse.ArgumentParser(prog="vsgroups", description="virtual singular braid groups")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name in ("exp", "perm", "decompose", "nf2"):
            p.add_argument("words", nargs=1, metavar="WORD")
        elif name == "verify-iso":
            p.add_argument("words", nargs=1, metavar="CERTIFICATE")
        if name == "verify-hom":
            p.add_argument("--map", choices=MAPS, default="phi")
        if name in ("abelianize", "lcs2", "homcount"):
            p.add_argument("--presentation", metavar="FILE", help="read the group from a presentation file")
        if name == "homcount":
            p.add_argument("--targets", default="S3,S4")
        if name == "suite":
            p.add_argument("--only", help="comma-separated criterion numbers")
            p.add_argument("--jobs", type=int, default=1)
    return parser


def parse_config(argv) -> CliConfig:
    ns = vars(build_parser().parse_args(argv))
    base = {k: ns.pop(k) for k in ("subcommand", "family", "n", "triple", "format", "seed", "budget")}
    words = ns.pop("words", None) or []
    return CliConfig(words=words, extra=ns, **base)


def run(argv=None, stream=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as e:        # argparse reports usage errors this way
        return USAGE if e.code else OK
    out = Output(cfg.format, stream)
    try:
        if cfg.triple is not None:
            parse_triple(cfg.triple)
        if cfg.n is not None and cfg.n < 2:
            raise UsageError("--n must be at least 2")
        return COMMANDS[cfg.subcommand][0](cfg, out)
    except (UsageError, WordError, PresentationError, HomError, ValueError, OSError) as e:
        print(f"vsgroups {cfg.subcommand}: {e}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())
