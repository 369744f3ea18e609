"""Representation files."""

from pathlib import Path
from typing import NotRequired, TypedDict

from cluster_bases.documents import dump_document, parse_document
from cluster_bases.errors import FormatError

from .base import QuiverRep, make_quiver


class QuiverDocument(TypedDict):
    vertices: list[str]
    arrows: list[list[str]]


class RepDocument(TypedDict):
    quiver: QuiverDocument
    dims: list[int]
    maps: list[list[list[int]]]
    field: NotRequired[int]


def parse_rep(text: str, source: str = "<input>") -> RepDocument:
    document = parse_document(text, RepDocument, source)
    rep_from_document(document, source)
    return document


def load_rep_document(path: Path) -> RepDocument:
    return parse_rep(path.read_text(), source=str(path))


def rep_from_document(document: RepDocument, source: str = "<input>") -> QuiverRep:
    try:
        quiver = make_quiver(document["quiver"]["vertices"], document["quiver"]["arrows"])
        maps = [matrix if matrix else [] for matrix in document["maps"]]
        rep = QuiverRep.create(quiver, document["dims"], maps)
    except ValueError as e:
        raise FormatError(f"{source}: {e}") from e
    field = document.get("field")
    if field is not None:
        return QuiverRep(rep.quiver, rep.dims, rep.maps, field=field)
    return rep


def document_from_rep(rep: QuiverRep) -> RepDocument:
    quiver = rep.quiver
    if any(x.denominator != 1 for matrix in rep.maps for row in matrix for x in row):
        raise FormatError("representation files hold integer matrices only")
    document: RepDocument = {
        "quiver": {
            "vertices": list(quiver.vertices),
            "arrows": [[quiver.vertices[a], quiver.vertices[b]] for a, b in quiver.arrows],
        },
        "dims": list(rep.dims),
        "maps": [[[int(x) for x in row] for row in matrix] for matrix in rep.maps],
    }
    if rep.field is not None:
        document["field"] = rep.field
    return document


def dump_rep(document: RepDocument) -> str:
    return dump_document({key: document[key] for key in ("quiver", "dims", "maps", "field") if key in document})
