from enum import Enum
from typing import NamedTuple

import polars as pl

from cluster_bases.errors import ClusterError
from cluster_bases.ring import Exponent, ScalarPoly, TorusElement


class SeedShapeError(ClusterError):
    pass


class NotExpandableError(ClusterError):
    pass


class DegreeAdjustmentError(ClusterError):
    pass


class ChebyshevKind(str, Enum):
    FIRST = "first"
    SECOND = "second"


class AnnulusKind(str, Enum):
    BANGLE = "bangle"
    BRACELET = "bracelet"
    BAND = "band"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class DistinguishedExpansion(NamedTuple):
    base_g: Exponent
    terms: dict[Exponent, ScalarPoly]
    "Coefficient of I_g' for every degree g' reached within the window."
    truncation: int
    remainder: TorusElement
    "Part of the input whose support lies beyond the window."


class MemberVerdict(NamedTuple):
    index: int
    degree: Exponent | None
    pointed: Verdict
    bar_invariant: Verdict
    triangular: Verdict
    detail: str


class TriangularReport(NamedTuple):
    members: tuple[MemberVerdict, ...]
    truncation: int
    monomials: Verdict | None = None
    "Whether the family holds the cluster monomials of the seed and its injective copy; None without a witness."
    monomial_detail: str = ""

    def all(self, condition: str, verdict: Verdict = Verdict.PASS) -> bool:
        return all(getattr(member, condition) == verdict for member in self.members)

    def to_frame(self) -> pl.DataFrame:
        return pl.DataFrame(
            {
                "member": [m.index for m in self.members],
                "degree": [str(list(m.degree)) if m.degree is not None else "-" for m in self.members],
                "pointed": [m.pointed.value for m in self.members],
                "bar_invariant": [m.bar_invariant.value for m in self.members],
                "triangular": [m.triangular.value for m in self.members],
                "detail": [m.detail for m in self.members],
            }
        )
