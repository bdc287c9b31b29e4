"""Exact engine for four K-theoretic polynomial families.

Kaons and glide polynomials are generating functions of mesonic glides;
Lascoux atoms and quasiLascoux polynomials are generating functions of
set-valued skyline fillings.  The package computes the expansion of the
second pair on the first, the sign-reversing involution behind the
alternating-sum theorem, and exhaustive desk-scale verification of all of
it.
"""

from .compositions import (
    Komposition,
    WeakComposition,
    dominates,
    dominating_set,
    excess,
    is_weakly_decreasing_nonzero,
    nonzero_parts,
    nonzero_positions,
)
from .expansions import (
    ExpansionTable,
    alternating_sums,
    expansion,
    glide_expansion,
    kaon_expansion,
    verify_atom_kaon_identity,
    verify_quasi_glide_identity,
)
from .glides import (
    GlideBlock,
    enumerate_block_fillings,
    enumerate_mesonic_glides,
    glide_polynomial,
    kaon,
)
from .involution import (
    InvolutionError,
    PairingReport,
    chosen_value_oracle,
    iota,
    modified_entry,
    pairing,
    predicted_fixed_point,
    try_add_free,
    try_remove_free,
)
from .polynomial import Monomial, SparsePolynomial, polynomial_sum
from .skyline import (
    Family,
    SkylineFilling,
    enumerate_atom_fillings,
    enumerate_family,
    enumerate_fillings,
    enumerate_meson_highest,
    enumerate_quasi_fillings,
    enumerate_quasi_yamanouchi,
    free_insertion_row,
    in_family,
    is_meson_highest,
    is_quasi_semistandard,
    is_quasi_yamanouchi,
    is_semistandard,
    lascoux_atom,
    lift_rows,
    quasi_lascoux,
    settle_rows,
)

__version__ = "0.1.0"

__all__ = [
    "ExpansionTable",
    "Family",
    "GlideBlock",
    "InvolutionError",
    "Komposition",
    "Monomial",
    "PairingReport",
    "SkylineFilling",
    "SparsePolynomial",
    "WeakComposition",
    "alternating_sums",
    "chosen_value_oracle",
    "dominates",
    "dominating_set",
    "enumerate_atom_fillings",
    "enumerate_block_fillings",
    "enumerate_family",
    "enumerate_fillings",
    "enumerate_meson_highest",
    "enumerate_mesonic_glides",
    "enumerate_quasi_fillings",
    "enumerate_quasi_yamanouchi",
    "excess",
    "expansion",
    "free_insertion_row",
    "glide_expansion",
    "glide_polynomial",
    "in_family",
    "iota",
    "is_meson_highest",
    "is_quasi_semistandard",
    "is_quasi_yamanouchi",
    "is_semistandard",
    "is_weakly_decreasing_nonzero",
    "kaon",
    "kaon_expansion",
    "lascoux_atom",
    "lift_rows",
    "modified_entry",
    "nonzero_parts",
    "nonzero_positions",
    "pairing",
    "polynomial_sum",
    "predicted_fixed_point",
    "quasi_lascoux",
    "settle_rows",
    "try_add_free",
    "try_remove_free",
    "verify_atom_kaon_identity",
    "verify_quasi_glide_identity",
]
