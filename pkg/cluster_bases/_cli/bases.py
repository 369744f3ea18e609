from pathlib import Path
from typing import TypedDict

from cluster_bases.bases import AnnulusKind, Verdict, annulus_element, distinguished_function, verify_triangular
from cluster_bases.documents import read_document
from cluster_bases.explore import find_injective_copy
from cluster_bases.ring import parse_element
from cluster_bases.seed import Seed

from . import console, emit


class FamilyDocument(TypedDict):
    elements: list[str]
    "Canonical renderings of the members, in the coordinates of the initial seed."


def process_annulus(seed: Seed, kind: AnnulusKind, k: int, as_json: bool) -> None:
    element = annulus_element(kind, k, seed)
    emit({"kind": kind.value, "k": k, "element": element.render()}, as_json, [element.render()])


def process_distinguished(seed: Seed, g: tuple[int, ...], depth: int, as_json: bool) -> None:
    with console.status("Searching for an injective copy of the seed..."):
        witness = find_injective_copy(seed, depth)
    element = distinguished_function(seed, witness, g)
    emit({"g": list(g), "element": element.render()}, as_json, [element.render()])


def process_verify_triangular(
    seed: Seed, family_path: Path, truncation: int | None, depth: int | None, as_json: bool
) -> bool:
    """Report per-member verdicts; ``False`` when any member or the cluster monomial check fails."""
    document = read_document(family_path, FamilyDocument)
    family = [parse_element(text, seed.frame) for text in document["elements"]]
    witness = None
    if depth is not None:
        with console.status("Searching for an injective copy of the seed..."):
            witness = find_injective_copy(seed, depth)
    with console.status(f"Verifying {len(family)} members..."):
        report = verify_triangular(family, seed, witness, truncation=truncation)
    frame = report.to_frame()
    verdicts = {condition: report.all(condition) for condition in ("pointed", "bar_invariant", "triangular")}
    lines = [str(frame), *(f"{condition}: {'pass' if ok else 'not all pass'}" for condition, ok in verdicts.items())]
    monomials = report.monomials.value if report.monomials is not None else None
    if monomials is not None:
        lines.append(f"cluster monomials: {monomials} {report.monomial_detail}".rstrip())
    emit(
        {"truncation": report.truncation, "members": frame.to_dicts(), **verdicts, "monomials": monomials},
        as_json,
        lines,
    )
    if report.monomials is Verdict.FAIL:
        return False
    return not any(
        Verdict.FAIL in (member.pointed, member.bar_invariant, member.triangular) for member in report.members
    )
