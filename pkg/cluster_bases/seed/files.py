"""Seed and triangulation files."""

from pathlib import Path
from typing import NotRequired, TypedDict

from cluster_bases.documents import dump_document, parse_document
from cluster_bases.errors import ClusterError, FormatError
from cluster_bases.ring import Frame, as_matrix

from .base import Seed, Triangulation
from .matrix import find_compatible_lambda
from .mutation import initial_seed
from .triangulation import make_triangulation

SeedDocument = TypedDict(
    "SeedDocument",
    {
        "vertices": list[str],
        "frozen": list[str],
        "d": list[int],
        "b": list[list[int]],
        "lambda": NotRequired[list[list[int]]],
    },
)


class TriangulationDocument(TypedDict):
    arcs: list[str]
    frozen_arcs: list[str]
    triangles: list[list[str]]


def parse_seed(text: str, source: str = "<input>") -> SeedDocument:
    document = parse_document(text, SeedDocument, source)
    size = len(document["vertices"])
    if len(document["d"]) != size:
        raise FormatError(f"{source}: field 'd' has {len(document['d'])} entries, expected {size}")
    for name in ("b", "lambda"):
        matrix = document.get(name)
        if matrix is None:
            continue
        if len(matrix) != size:
            raise FormatError(f"{source}: field {name!r} has {len(matrix)} rows, expected {size}")
        for i, row in enumerate(matrix):
            if len(row) != size:
                raise FormatError(f"{source}: row {i} of field {name!r} has {len(row)} entries, expected {size}")
    for vertex in document["frozen"]:
        if vertex not in document["vertices"]:
            raise FormatError(f"{source}: frozen vertex {vertex!r} is not declared")
    b = document["b"]
    for i in range(size):
        for j in range(size):
            if b[i][j] * document["d"][j] != -b[j][i] * document["d"][i]:
                raise FormatError(f"{source}: b is not skew-symmetrizable at ({i},{j})")
    return document


def load_seed_document(path: Path) -> SeedDocument:
    return parse_seed(path.read_text(), source=str(path))


def seed_from_document(document: SeedDocument, quantum: bool | None = None) -> Seed:
    """Build the initial seed of a document.

    ``quantum=None`` keeps whatever the file declares; ``True`` searches for a compatible Λ
    when the file has none; ``False`` drops Λ.
    """
    lam = document.get("lambda")
    try:
        frame = Frame.create(document["vertices"], document["frozen"], document["d"])
    except ValueError as e:
        raise FormatError(str(e)) from e
    b_full = as_matrix(document["b"])
    if quantum is False:
        lam = None
    elif quantum and lam is None:
        lam = find_compatible_lambda(b_full, frame.unfrozen)
    try:
        return initial_seed(frame.with_lambda(as_matrix(lam) if lam is not None else None), b_full)
    except (ClusterError, ValueError) as e:
        raise FormatError(str(e)) from e


def document_from_seed(seed: Seed) -> SeedDocument:
    frame = seed.frame
    document: SeedDocument = {
        "vertices": list(frame.vertices),
        "frozen": [frame.vertices[i] for i in frame.frozen],
        "d": list(frame.d),
        "b": [list(row) for row in seed.b_full],
    }
    if seed.lambda_local is not None:
        document["lambda"] = [list(row) for row in seed.lambda_local]
    return document


def dump_seed(document: SeedDocument) -> str:
    ordered = {key: document[key] for key in ("vertices", "frozen", "d", "b") if key in document}
    if "lambda" in document:
        ordered["lambda"] = document["lambda"]
    return dump_document(ordered)


def parse_triangulation(text: str, source: str = "<input>") -> TriangulationDocument:
    document = parse_document(text, TriangulationDocument, source)
    try:
        make_triangulation(document["arcs"], document["frozen_arcs"], document["triangles"])
    except ClusterError as e:
        raise FormatError(f"{source}: {e}") from e
    return document


def triangulation_from_document(document: TriangulationDocument) -> Triangulation:
    return make_triangulation(document["arcs"], document["frozen_arcs"], document["triangles"])


def dump_triangulation(document: TriangulationDocument) -> str:
    return dump_document({key: document[key] for key in ("arcs", "frozen_arcs", "triangles")})
