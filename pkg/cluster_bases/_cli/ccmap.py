from pathlib import Path

from cluster_bases.ccmap import (
    cc,
    generic_character,
    injective_g_vector,
    load_rep_document,
    quiver_of,
    rep_from_document,
)
from cluster_bases.seed import Seed

from . import console, emit


def process_character(seed: Seed, rep_path: Path, as_json: bool) -> None:
    rep = rep_from_document(load_rep_document(rep_path), source=str(rep_path))
    with console.status(f"Counting subrepresentations of dimension {list(rep.dims)}..."):
        element = cc(rep, seed)
    emit(
        {"g": list(injective_g_vector(rep)), "element": element.render()},
        as_json,
        [element.render()],
    )


def process_generic(seed: Seed, g: tuple[int, ...], rng_seed: int, samples: int, as_json: bool) -> None:
    with console.status(f"Sampling {samples} morphisms for g={list(g)}..."):
        element = generic_character(g, quiver_of(seed), seed, samples=samples, rng_seed=rng_seed)
    emit(
        {"g": list(g), "rng_seed": rng_seed, "samples": samples, "element": element.render()},
        as_json,
        [element.render()],
    )
