import logging
from typing import Literal, TypeAlias

from .base import Exponent, InexactDivisionError
from .scalar import ScalarPoly
from .torus import TorusElement, _check_frames, twisted_mul

logger = logging.getLogger(__name__)

Side: TypeAlias = Literal["left", "right"]


def _bounds(element: TorusElement) -> tuple[Exponent, Exponent]:
    support = element.support()
    return tuple(map(min, zip(*support))), tuple(map(max, zip(*support)))


def exact_divide(numerator: TorusElement, divisor: TorusElement, side: Side = "right") -> TorusElement:
    """Return q with q * divisor == numerator (right) or divisor * q == numerator (left).

    Leading-term elimination in lexicographic order. The quotient of an exact division has
    coordinatewise exponent bounds determined by those of numerator and divisor, so a
    candidate term outside that box proves the division inexact.
    """
    _check_frames(numerator, divisor)
    frame = numerator.frame
    if not divisor:
        raise InexactDivisionError("division by zero")
    if not numerator:
        return TorusElement.zero(frame)
    lead = divisor.leading_exponent()
    unit = divisor.coefficient(lead).unit()
    if unit is None:
        raise InexactDivisionError(
            f"leading coefficient {divisor.coefficient(lead).render()} of the divisor is not invertible"
        )
    sign, power = unit
    num_lo, num_hi = _bounds(numerator)
    div_lo, div_hi = _bounds(divisor)
    lo = tuple(a - b for a, b in zip(num_lo, div_lo))
    hi = tuple(a - b for a, b in zip(num_hi, div_hi))

    remainder = {m: c for m, c in numerator.items()}
    quotient: dict[Exponent, ScalarPoly] = {}
    while remainder:
        top = max(remainder)
        e = tuple(a - b for a, b in zip(top, lead))
        if any(not low <= x <= high for x, low, high in zip(e, lo, hi)):
            raise InexactDivisionError(
                f"nonzero remainder at X{list(top)}: {numerator.render()} is not divisible by {divisor.render()}"
            )
        twist = frame.pairing(e, lead) if side == "right" else frame.pairing(lead, e)
        coeff = remainder[top].shift(-power - twist) * sign
        term = TorusElement.monomial(frame, e, coeff)
        product = twisted_mul(term, divisor) if side == "right" else twisted_mul(divisor, term)
        for m, c in product.items():
            value = remainder.get(m, ScalarPoly()) - c
            if value:
                remainder[m] = value
            else:
                remainder.pop(m, None)
        quotient[e] = quotient[e] + coeff if e in quotient else coeff
    logger.debug("divided %d terms by %d terms, quotient has %d terms", len(numerator), len(divisor), len(quotient))
    return TorusElement(frame, quotient)
