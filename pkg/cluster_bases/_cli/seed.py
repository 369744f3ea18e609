import json
from pathlib import Path

from cluster_bases.ccmap import dump_rep, parse_rep
from cluster_bases.errors import FormatError
from cluster_bases.explore import explore, export_catalog, find_injective_copy
from cluster_bases.seed import (
    Seed,
    dump_seed,
    dump_triangulation,
    mutate_sequence,
    parse_seed,
    parse_triangulation,
)
from cluster_bases.tropical import TropicalPoint, extract_pointed, render_decomposition, transport

from . import console, emit, matrix_lines, output_path
from .types import ExploreModeOption, FileKind


def _labels(seed: Seed, indices) -> list[str]:
    return [seed.label(k) for k in indices]


def process_mutate(seed: Seed, sequence: list[int], as_json: bool) -> None:
    mutated = mutate_sequence(seed, sequence)
    changed = sorted(set(sequence))
    payload = {
        "history": _labels(seed, mutated.history),
        "variables": {mutated.label(k): mutated.variables[k].render() for k in changed},
        "b": [list(row) for row in mutated.b_full],
        "lambda": [list(row) for row in mutated.lambda_local] if mutated.lambda_local is not None else None,
    }
    lines = [f"X{mutated.label(k)}' = {mutated.variables[k].render()}" for k in changed]
    lines += matrix_lines("B", mutated.b_full) + matrix_lines("Lambda", mutated.lambda_local)
    emit(payload, as_json, lines)


def process_expand(seed: Seed, sequence: list[int], as_json: bool) -> None:
    mutated = mutate_sequence(seed, sequence)
    variables = {mutated.label(k): v.render() for k, v in enumerate(mutated.variables)}
    emit(
        {"history": _labels(seed, mutated.history), "variables": variables},
        as_json,
        [f"{label}: {text}" for label, text in variables.items()],
    )


def process_gvec(seed: Seed, sequence: list[int], vertex: int, as_json: bool) -> None:
    mutated = mutate_sequence(seed, sequence)
    decomposition = extract_pointed(mutated.variables[vertex], seed)
    payload = {
        "g": list(decomposition.g),
        "f": {",".join(map(str, n)): c.render() for n, c in sorted(decomposition.f_poly.items())},
    }
    emit(payload, as_json, [render_decomposition(decomposition)])


def process_trop(seed: Seed, g: tuple[int, ...], sequence: list[int], as_json: bool) -> None:
    point = transport(TropicalPoint(anchor=(), g=g), sequence, seed)
    emit(
        {"anchor": _labels(seed, point.anchor), "g": list(point.g)},
        as_json,
        ["g=[" + ",".join(map(str, point.g)) + "]"],
    )


def process_explore(
    seed: Seed,
    depth: int,
    mode: ExploreModeOption,
    as_json: bool,
    export: bool,
    output_folder: Path,
    workers: int = 1,
) -> None:
    with console.status(f"Exploring to depth {depth}..."):
        catalog = explore(seed, depth, mode=mode.value, workers=workers)
    document = export_catalog(catalog)
    if export:
        output_folder.mkdir(parents=True, exist_ok=True)
        path = output_path(output_folder, f"catalog_depth{depth}_{mode.value}", "json")
        path.write_text(json.dumps(document, indent=2) + "\n")
        console.print(f"Catalog written to [b]{path}[/]")
    emit(
        {"seeds": len(catalog.seeds), "variables": document["variables"]},
        as_json,
        [f"seeds: {len(catalog.seeds)}", f"variables: {len(catalog.variables)}", *document["variables"]],
    )


def process_find_t1(seed: Seed, depth: int, as_json: bool) -> None:
    witness = find_injective_copy(seed, depth)
    sigma = {seed.label(k): seed.label(witness.sigma[k]) for k in seed.unfrozen}
    emit(
        {"sequence": _labels(seed, witness.sequence), "sigma": sigma},
        as_json,
        [
            "sequence: [" + ",".join(_labels(seed, witness.sequence)) + "]",
            "sigma: " + ", ".join(f"{a}->{b}" for a, b in sigma.items()),
        ],
    )


def detect_kind(text: str) -> FileKind:
    try:
        keys = json.loads(text).keys()
    except (json.JSONDecodeError, AttributeError):
        raise FormatError("input is not a JSON object") from None
    if "arcs" in keys:
        return FileKind.TRIANGULATION
    if "quiver" in keys:
        return FileKind.REPRESENTATION
    return FileKind.SEED


def roundtrip(path: Path, kind: FileKind | None = None) -> str:
    text = path.read_text()
    kind = kind or detect_kind(text)
    if kind is FileKind.TRIANGULATION:
        return dump_triangulation(parse_triangulation(text, source=str(path)))
    if kind is FileKind.REPRESENTATION:
        return dump_rep(parse_rep(text, source=str(path)))
    return dump_seed(parse_seed(text, source=str(path)))
