"""Virtual singular braid groups: words, presentations, homomorphisms, kernels and invariants."""

from .homs import (
    ExponentData, GeneratorMap, classify_triples, exponent_sums, phi_triple, psi_map, verify_homomorphism,
)
from .iso import IsoCertificate, verify_iso
from .kernels import kernel_pipeline, kernel_presentation
from .lcs import AbelianInvariants, abelianization, gamma2_mod_gamma3
from .presentations import REGISTRY, Presentation, build_presentation
from .structure import decompose, forbidden_check, nf2
from .words import Word, format_word, parse_word

__version__ = "0.1.0"
