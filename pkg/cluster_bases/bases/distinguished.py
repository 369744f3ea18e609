import logging
from collections.abc import Sequence

from cluster_bases.explore import InjectiveWitness
from cluster_bases.lattice import decompose, solve_offset
from cluster_bases.ring import Exponent, ScalarPoly, TorusElement, pointed_normalize, twisted_mul
from cluster_bases.seed import Seed, cluster_monomial, express_in, mutate_sequence, ordered_product, rebase
from cluster_bases.settings import get_settings

from .base import DegreeAdjustmentError, DistinguishedExpansion, NotExpandableError

logger = logging.getLogger(__name__)


class DistinguishedFunctions:
    """Distinguished functions I_g of a seed, expressed in that seed's own coordinates."""

    def __init__(self, s: Seed, witness: InjectiveWitness) -> None:
        self.seed = s
        self.chart = rebase(s)
        self.witness = witness
        self.shifted = mutate_sequence(self.chart, witness.sequence)
        self._cache: dict[Exponent, TorusElement] = {}

    @property
    def frame(self):
        return self.chart.frame

    def injective(self, k: int) -> TorusElement:
        return self.shifted.variables[self.witness.sigma[k]]

    def __call__(self, g: Sequence[int]) -> TorusElement:
        g = tuple(g)
        if g not in self._cache:
            self._cache[g] = self._build(g)
        return self._cache[g]

    def _build(self, g: Exponent) -> TorusElement:
        chart, unfrozen = self.chart, self.chart.unfrozen
        size = chart.rank
        positive = tuple(max(g[i], 0) if i in unfrozen else 0 for i in range(size))
        negative = [max(-g[k], 0) for k in unfrozen]
        degree = list(positive)
        factors = []
        for k, e in zip(unfrozen, negative):
            factors.append(self.injective(k))
            g_k = self.shifted.degrees[self.witness.sigma[k]]
            degree = [a + e * b for a, b in zip(degree, g_k)]
        product = cluster_monomial(chart, positive)
        if any(negative):
            product = twisted_mul(product, ordered_product(factors, negative, None))
        frozen = tuple(a - b for a, b in zip(g, degree))
        if any(frozen[k] for k in unfrozen):
            raise DegreeAdjustmentError(f"degree {list(g)} cannot be reached: principal mismatch {list(frozen)}")
        if any(frozen):
            product = twisted_mul(TorusElement.monomial(chart.frame, frozen), product)
        return pointed_normalize(product, g)


def distinguished_function(s: Seed, witness: InjectiveWitness, g: Sequence[int]) -> TorusElement:
    """Pointed-normalized X^m * X(t)^[g]_+ * I(t)^[-g]_+ of degree ``g``, in the coordinates of ``s``."""
    return DistinguishedFunctions(s, witness)(g)


def expand_in_distinguished(
    z: TorusElement,
    s: Seed,
    witness: InjectiveWitness,
    truncation: int | None = None,
    functions: DistinguishedFunctions | None = None,
) -> DistinguishedExpansion:
    """Greedy expansion of a pointed element over distinguished functions, up to |n|_1 <= truncation."""
    truncation = truncation if truncation is not None else get_settings().truncation
    functions = functions or DistinguishedFunctions(s, witness)
    local = express_in(z, s)
    base = decompose(local, s.b_full, s.unfrozen).g
    remainder = local
    terms: dict[Exponent, ScalarPoly] = {}
    while remainder:
        window = []
        for m in remainder.support():
            n = solve_offset(tuple(a - b for a, b in zip(m, base)), s.b_full, s.unfrozen)
            if n is None or any(x < 0 for x in n):
                raise NotExpandableError(f"X{list(m)} is not of the form X^g Y^n for g = {list(base)}")
            if sum(n) <= truncation:
                window.append((sum(n), n, m))
        if not window:
            break
        _, _, degree = min(window)
        coeff = remainder.coefficient(degree)
        remainder = remainder - functions(degree).scale(coeff)
        terms[degree] = terms[degree] + coeff if degree in terms else coeff
        logger.debug("subtracted %s * I%s", coeff.render(), list(degree))
    return DistinguishedExpansion(base_g=base, terms=terms, truncation=truncation, remainder=remainder)


def reassemble(expansion: DistinguishedExpansion, functions: DistinguishedFunctions) -> TorusElement:
    total = expansion.remainder
    for degree, coeff in expansion.terms.items():
        total = total + functions(degree).scale(coeff)
    return total
