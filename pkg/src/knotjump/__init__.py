"""Signature functions, jump divisors, and Jones jump divisors of knots.

The package computes three descriptions of how the Levine-Tristram
signature of a knot steps across the roots of its Alexander polynomial
and checks that they agree: the direct signature jump, the Laurent
expansion of the quantum Q-function, and a skein-theoretic crossing flip.
Torus knots get a dedicated closed-form model plus a four-way sweep.
"""

from .braid import BraidWord, IntMatrix, seifert_matrix
from .invariants import (
    DegenerateEvaluation,
    JumpDivisor,
    JumpEntry,
    alexander,
    jump_divisor,
    signature_at,
    signature_samples,
)
from .qjump import (
    CatalogError,
    KnotCheck,
    KnotRecord,
    NonSimpleRoot,
    RootRow,
    check_conjecture,
    jj_divisor,
    laurent_fit,
    laurent_leading,
    load_catalog,
    parallel_pullback,
    rational_q,
)
from .skein import (
    GoodProjection,
    SearchExhausted,
    good_crossings,
    make_good,
    skein_jump,
    verify_lemma_skeins,
    verify_lemma_tbordered,
)
from .sympoly import AlgebraicRoot, SymPoly, isolate_roots, theta_sign
from .torus import TorusKnot, coprime_pairs, delta_torus, jump_torus, sweep, verify_torus

__version__ = "0.1.0"

__all__ = [
    "AlgebraicRoot",
    "BraidWord",
    "CatalogError",
    "DegenerateEvaluation",
    "GoodProjection",
    "IntMatrix",
    "JumpDivisor",
    "JumpEntry",
    "KnotCheck",
    "KnotRecord",
    "NonSimpleRoot",
    "RootRow",
    "SearchExhausted",
    "SymPoly",
    "TorusKnot",
    "alexander",
    "check_conjecture",
    "coprime_pairs",
    "delta_torus",
    "good_crossings",
    "isolate_roots",
    "jj_divisor",
    "jump_divisor",
    "jump_torus",
    "laurent_fit",
    "laurent_leading",
    "load_catalog",
    "make_good",
    "parallel_pullback",
    "rational_q",
    "seifert_matrix",
    "signature_at",
    "signature_samples",
    "skein_jump",
    "sweep",
    "theta_sign",
    "verify_lemma_skeins",
    "verify_lemma_tbordered",
    "verify_torus",
]
