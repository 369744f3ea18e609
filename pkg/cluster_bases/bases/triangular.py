"""Verification of the triangular-basis conditions for a candidate family, to finite order."""

import itertools
import logging
from collections.abc import Sequence

from cluster_bases.explore import InjectiveWitness
from cluster_bases.lattice import NotPointedError, decompose, solve_offset
from cluster_bases.ring import Exponent, NormalizationError, TorusElement, bar, pointed_normalize, twisted_mul
from cluster_bases.seed import (
    Seed,
    cluster_monomial,
    express_in,
    initial_variables_in,
    local_frame,
    mutate_sequence,
)
from cluster_bases.settings import get_settings

from .base import MemberVerdict, TriangularReport, Verdict

logger = logging.getLogger(__name__)


class _Family:
    """Family members indexed by degree, closed under multiplication by frozen monomials."""

    def __init__(self, s: Seed, members: dict[Exponent, TorusElement]) -> None:
        self.seed = s
        self.members = members
        self.by_principal = {self._principal(g): g for g in members}

    def _principal(self, g: Exponent) -> tuple[int, ...]:
        return tuple(g[k] for k in self.seed.unfrozen)

    def lookup(self, g: Exponent) -> TorusElement | None:
        if g in self.members:
            return self.members[g]
        h = self.by_principal.get(self._principal(g))
        if h is None:
            return None
        shift = tuple(a - b for a, b in zip(g, h))
        frame = self.members[h].frame
        return pointed_normalize(twisted_mul(TorusElement.monomial(frame, shift), self.members[h]), g)


def _check_product(family: _Family, product: TorusElement, lead: Exponent, truncation: int) -> tuple[Verdict, str]:
    s = family.seed
    first = family.lookup(lead)
    if first is None:
        return Verdict.INCONCLUSIVE, f"degree {list(lead)} missing from the family"
    remainder = product - first
    while remainder:
        window = []
        for m in remainder.support():
            n = solve_offset(tuple(a - b for a, b in zip(m, lead)), s.b_full, s.unfrozen)
            if n is None or any(x < 0 for x in n) or not any(n):
                return Verdict.FAIL, f"term X{list(m)} is not strictly below {list(lead)}"
            if sum(n) <= truncation:
                window.append((sum(n), n, m))
        if not window:
            break
        _, _, degree = min(window)
        coeff = remainder.coefficient(degree)
        if not coeff.is_strictly_negative:
            return Verdict.FAIL, f"coefficient {coeff.render()} at {list(degree)} is not in v^-1 Z[v^-1]"
        member = family.lookup(degree)
        if member is None:
            return Verdict.INCONCLUSIVE, f"degree {list(degree)} missing from the family"
        remainder = remainder - member.scale(coeff)
    return Verdict.PASS, ""


def _monomial_verdict(family: _Family, witness: InjectiveWitness, max_degree: int) -> tuple[Verdict, str]:
    s = family.seed
    chart = initial_variables_in(s) if s.history else None
    missing = []
    for seed in (s, mutate_sequence(s, witness.sequence)):
        for m in itertools.product(range(max_degree + 1), repeat=len(s.unfrozen)):
            if sum(m) > max_degree:
                continue
            exponent = [0] * s.rank
            for k, e in zip(s.unfrozen, m):
                exponent[k] = e
            monomial = express_in(cluster_monomial(seed, exponent), s, chart)
            g = decompose(monomial, s.b_full, s.unfrozen).g
            member = family.lookup(g)
            if member is None:
                missing.append(g)
            elif member != monomial:
                return Verdict.FAIL, f"member of degree {list(g)} is not the cluster monomial of that degree"
    if missing:
        return Verdict.INCONCLUSIVE, f"cluster monomial of degree {list(missing[0])} missing from the family"
    return Verdict.PASS, ""


def verify_triangular(
    family: Sequence[TorusElement],
    s: Seed,
    witness: InjectiveWitness | None = None,
    truncation: int | None = None,
    monomial_degree: int = 2,
) -> TriangularReport:
    """Check pointedness, bar-invariance and triangularity of every member against seed ``s``.

    With a ``witness`` the report also says whether the family contains the cluster monomials
    of ``s`` and of its injective copy, with unfrozen exponents summing to at most
    ``monomial_degree``.
    """
    truncation = truncation if truncation is not None else get_settings().truncation
    frame = local_frame(s)
    local = [express_in(member, s) for member in family]
    degrees: list[Exponent | None] = []
    pointed: list[Verdict] = []
    details: list[str] = []
    for element in local:
        try:
            degrees.append(decompose(element, s.b_full, s.unfrozen).g)
            pointed.append(Verdict.PASS)
            details.append("")
        except NotPointedError as e:
            degrees.append(None)
            pointed.append(Verdict.FAIL)
            details.append(str(e))
    catalog = _Family(s, {g: element for g, element in zip(degrees, local) if g is not None})

    members = []
    for index, element in enumerate(local):
        g = degrees[index]
        invariant = Verdict.PASS if bar(element) == element else Verdict.FAIL
        triangular, detail = Verdict.INCONCLUSIVE, details[index] or "not pointed"
        if g is not None:
            outcomes = []
            for i in range(s.rank):
                lead = tuple(x + (1 if j == i else 0) for j, x in enumerate(g))
                try:
                    product = pointed_normalize(twisted_mul(TorusElement.variable(frame, i), element), lead)
                except NormalizationError as e:
                    outcomes.append((Verdict.FAIL, str(e)))
                    continue
                outcomes.append(_check_product(catalog, product, lead, truncation))
            failures = [text for verdict, text in outcomes if verdict is Verdict.FAIL]
            gaps = [text for verdict, text in outcomes if verdict is Verdict.INCONCLUSIVE]
            if failures:
                triangular, detail = Verdict.FAIL, failures[0]
            elif gaps:
                triangular, detail = Verdict.INCONCLUSIVE, gaps[0]
            else:
                triangular, detail = Verdict.PASS, ""
        logger.debug("member %d: %s %s %s", index, pointed[index].value, invariant.value, triangular.value)
        members.append(MemberVerdict(index, g, pointed[index], invariant, triangular, detail))
    if witness is None:
        return TriangularReport(members=tuple(members), truncation=truncation)
    monomials, detail = _monomial_verdict(catalog, witness, monomial_degree)
    logger.info("cluster monomials of the seed and its injective copy: %s", monomials.value)
    return TriangularReport(tuple(members), truncation, monomials, detail)
