import json
import os
from collections.abc import Generator
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any

import typer
from pathvalidate import sanitize_filename
from rich.console import Console
from rich.markup import escape
from typedload.exceptions import TypedloadException

from cluster_bases.errors import ClusterError, FormatError
from cluster_bases.seed import Seed, load_seed_document, seed_from_document

console = Console()
err_console = Console(stderr=True)


def output_path(output_folder: Path, suggested_filename: str, extension: str) -> Path:
    """First free ``<name>_<date>-<i>.<extension>`` inside ``output_folder``."""
    date_str = datetime.now().strftime("%Y-%m-%d")
    suggested_filename = sanitize_filename(f"{suggested_filename}_{date_str}")
    existing_filenames = set(output_folder.iterdir()) if output_folder.exists() else set()
    return next(
        _
        for i in range(0xFFFFFF)
        if (_ := output_folder.joinpath(f"{suggested_filename}-{i}{os.extsep}{extension}")) not in existing_filenames
    )


@contextmanager
def handle_errors() -> Generator[None, None, None]:
    """Exit 2 on malformed input, 1 on domain errors, printing the message verbatim."""
    try:
        yield
    except (FormatError, TypedloadException, ValueError) as e:
        err_console.print(f"[red]error:[/] {escape(str(e))}", soft_wrap=True)
        raise typer.Exit(2) from None
    except ClusterError as e:
        err_console.print(f"[red]error:[/] {escape(str(e))}", soft_wrap=True)
        raise typer.Exit(1) from None


def load_seed(path: Path, quantum: bool) -> Seed:
    return seed_from_document(load_seed_document(path), quantum=quantum)


def resolve_vertices(seed: Seed, labels: list[str] | None) -> list[int]:
    """Vertex ids, given repeatedly or comma separated, to positions."""
    labels = [part.strip() for label in labels or [] for part in label.split(",") if part.strip()]
    return [seed.frame.index(label) for label in labels]


def parse_vector(text: str, length: int | None = None) -> tuple[int, ...]:
    try:
        vector = tuple(int(part) for part in text.replace("[", "").replace("]", "").split(",") if part.strip())
    except ValueError:
        raise FormatError(f"cannot read an integer vector from {text!r}") from None
    if length is not None and len(vector) != length:
        raise FormatError(f"vector {list(vector)} must have {length} entries")
    return vector


def emit(payload: dict[str, Any], as_json: bool, lines: list[str]) -> None:
    if as_json:
        typer.echo(json.dumps(payload, indent=2))
    else:
        for line in lines:
            typer.echo(line)


def matrix_lines(name: str, matrix) -> list[str]:
    if matrix is None:
        return []
    return [f"{name} =", *("  " + " ".join(f"{x:>3}" for x in row) for row in matrix)]
