"""Seeds, exchange-matrix mutation, quantization and triangulations."""

from .base import (
    FrozenVertexError,
    IncompatibleLambdaError,
    LambdaSearchError,
    RankDeficiencyError,
    Seed,
    SkewSymmetrizabilityError,
    Triangulation,
    TriangulationError,
    VertexRangeError,
)
from .files import (
    SeedDocument,
    TriangulationDocument,
    document_from_seed,
    dump_seed,
    dump_triangulation,
    load_seed_document,
    parse_seed,
    parse_triangulation,
    seed_from_document,
    triangulation_from_document,
)
from .matrix import check_compatibility, check_full_rank, check_skew_symmetrizable, find_compatible_lambda, mutate_b
from .mutation import (
    cluster_monomial,
    degrees,
    express_in,
    initial_seed,
    initial_variables_in,
    local_frame,
    mutate_seed,
    mutate_sequence,
    ordered_product,
    rebase,
)
from .triangulation import make_triangulation, seed_from_triangulation, triangulation_to_b

__all__ = [
    "FrozenVertexError",
    "IncompatibleLambdaError",
    "LambdaSearchError",
    "RankDeficiencyError",
    "Seed",
    "SeedDocument",
    "SkewSymmetrizabilityError",
    "Triangulation",
    "TriangulationDocument",
    "TriangulationError",
    "VertexRangeError",
    "check_compatibility",
    "check_full_rank",
    "check_skew_symmetrizable",
    "cluster_monomial",
    "degrees",
    "document_from_seed",
    "dump_seed",
    "dump_triangulation",
    "express_in",
    "find_compatible_lambda",
    "initial_seed",
    "initial_variables_in",
    "load_seed_document",
    "local_frame",
    "make_triangulation",
    "mutate_b",
    "mutate_seed",
    "mutate_sequence",
    "ordered_product",
    "parse_seed",
    "parse_triangulation",
    "rebase",
    "seed_from_document",
    "seed_from_triangulation",
    "triangulation_from_document",
    "triangulation_to_b",
]
