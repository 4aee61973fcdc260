"""Exact-arithmetic engine for extended zigzag Schur algebras.

Thin wrapper over the C++ core. The heavy lifting (divided powers, exact
linear algebra, the verification legs) happens in the extension module.
"""

from ._zzschur import (
    acceptance_report,
    delta_character,
    dominant_weights,
    dump_tilting,
    eta_basis,
    kostka,
    lr_coeff,
    schur_dim,
    tilting_dim,
    verify_dims,
    verify_forms,
    verify_heredity,
    verify_integrality,
    verify_kostka,
    verify_lzprime,
    verify_ringel,
    verify_tilting,
    zigzag_dim,
)

__all__ = [
    "acceptance_report",
    "delta_character",
    "dominant_weights",
    "dump_tilting",
    "eta_basis",
    "kostka",
    "lr_coeff",
    "schur_dim",
    "tilting_dim",
    "verify_dims",
    "verify_forms",
    "verify_heredity",
    "verify_integrality",
    "verify_kostka",
    "verify_lzprime",
    "verify_ringel",
    "verify_tilting",
    "zigzag_dim",
]
