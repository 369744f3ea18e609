from .base import (
    Exponent,
    Frame,
    FrameMismatchError,
    InexactDivisionError,
    Matrix,
    NormalizationError,
    VertexRangeError,
    add_exponents,
    as_matrix,
    scale_exponent,
    sub_exponents,
    unit_vector,
)
from .division import Side, exact_divide
from .scalar import ONE, ZERO, ScalarPoly
from .torus import (
    TorusElement,
    bar,
    parse_element,
    parse_scalar,
    pointed_normalize,
    render_element,
    specialize_classical,
    twisted_mul,
)

__all__ = [
    "ONE",
    "ZERO",
    "Exponent",
    "Frame",
    "FrameMismatchError",
    "InexactDivisionError",
    "Matrix",
    "NormalizationError",
    "ScalarPoly",
    "Side",
    "TorusElement",
    "VertexRangeError",
    "add_exponents",
    "as_matrix",
    "bar",
    "exact_divide",
    "parse_element",
    "parse_scalar",
    "pointed_normalize",
    "render_element",
    "scale_exponent",
    "specialize_classical",
    "sub_exponents",
    "twisted_mul",
    "unit_vector",
]
