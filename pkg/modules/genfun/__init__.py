"""Exact rational generating functions and closed-form prefix sums."""

from .closed_forms import (
    ErratumEntry,
    SequenceKind,
    as_kind,
    closed_form_alt,
    closed_form_sum,
    direct_alt_sum,
    direct_sum,
    erratum_ledger,
    printed_closed_form_alt,
    printed_closed_form_sum,
)
from .partial_fractions import (
    SUM_LABELS,
    DecompositionIdentity,
    decompose_sum_gf,
    decomposition_identities,
    partial_fractions,
    printed_decomposition_identities,
    summation_gf,
)
from .poly import ONE, SYMBOL, Poly, poly_gcd, poly_xgcd
from .rational import (
    FIB_GF,
    LUCAS_GF,
    ZERO_GF,
    RationalGF,
    geometric_gf,
    gf_add,
    gf_mul,
    gf_scale,
    gf_sub,
    gf_substitute,
    series_coeffs,
)

__all__ = [
    "Poly",
    "poly_gcd",
    "poly_xgcd",
    "SYMBOL",
    "ONE",
    "RationalGF",
    "series_coeffs",
    "gf_add",
    "gf_sub",
    "gf_mul",
    "gf_scale",
    "gf_substitute",
    "geometric_gf",
    "FIB_GF",
    "LUCAS_GF",
    "ZERO_GF",
    "partial_fractions",
    "DecompositionIdentity",
    "SUM_LABELS",
    "summation_gf",
    "decompose_sum_gf",
    "decomposition_identities",
    "printed_decomposition_identities",
    "SequenceKind",
    "as_kind",
    "direct_sum",
    "direct_alt_sum",
    "closed_form_sum",
    "closed_form_alt",
    "printed_closed_form_sum",
    "printed_closed_form_alt",
    "ErratumEntry",
    "erratum_ledger",
]
