from functools import lru_cache

import sympy

from cluster_bases.errors import InvalidArgumentError
from cluster_bases.ring import TorusElement

from .base import ChebyshevKind

z = sympy.Symbol("z")


@lru_cache(maxsize=128)
def chebyshev(kind: ChebyshevKind, k: int) -> sympy.Poly:
    """T_k (first kind, T_0 = 2) or U_k (second kind) in the variable ``z``."""
    if k < 0:
        raise InvalidArgumentError(f"Chebyshev index must be nonnegative, got {k}")
    kind = ChebyshevKind(kind)
    previous = sympy.Poly(2 if kind is ChebyshevKind.FIRST else 1, z, domain="ZZ")
    current = sympy.Poly(z, z, domain="ZZ")
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, current * sympy.Poly(z, z, domain="ZZ") - previous
    return current


def evaluate(poly: sympy.Poly, element: TorusElement) -> TorusElement:
    """Horner evaluation with the product of the torus."""
    result = TorusElement.zero(element.frame)
    for coeff in poly.all_coeffs():
        result = result * element + int(coeff)
    return result
