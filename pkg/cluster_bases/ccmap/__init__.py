"""Quiver representations, quiver Grassmannian Euler characteristics and the cluster character."""

from .base import (
    BadReductionError,
    ClassicalFrameRequiredError,
    CyclicQuiverError,
    EnumerationBudgetError,
    InterpolationError,
    Quiver,
    QuiverMismatchError,
    QuiverRep,
    UnstableCharacterError,
    make_quiver,
    topological_order,
)
from .character import KRONECKER_QUIVER, band_module, cc, generic_character, loop_module, quiver_of
from .files import RepDocument, document_from_rep, dump_rep, load_rep_document, parse_rep, rep_from_document
from .finite_field import gaussian_binomial, rank_mod_p, subspaces
from .grassmannian import counting_polynomial, euler_char, reduce_rep, submodule_count
from .injective import (
    Copresentation,
    direct_sum,
    hom_basis,
    injective_copresentation,
    injective_g_vector,
    injective_module,
    kernel,
    paths_to,
    socle_dims,
)

__all__ = [
    "KRONECKER_QUIVER",
    "BadReductionError",
    "ClassicalFrameRequiredError",
    "Copresentation",
    "CyclicQuiverError",
    "EnumerationBudgetError",
    "InterpolationError",
    "Quiver",
    "QuiverMismatchError",
    "QuiverRep",
    "RepDocument",
    "UnstableCharacterError",
    "band_module",
    "cc",
    "counting_polynomial",
    "direct_sum",
    "document_from_rep",
    "dump_rep",
    "euler_char",
    "gaussian_binomial",
    "generic_character",
    "hom_basis",
    "injective_copresentation",
    "injective_g_vector",
    "injective_module",
    "kernel",
    "load_rep_document",
    "loop_module",
    "make_quiver",
    "parse_rep",
    "quiver_of",
    "rank_mod_p",
    "reduce_rep",
    "rep_from_document",
    "socle_dims",
    "submodule_count",
    "subspaces",
    "topological_order",
]
