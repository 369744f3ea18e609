"""Canonical JSON layout shared by every file format of the package."""

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any, TypeVar

import typedload
from typedload.exceptions import TypedloadException

from cluster_bases.errors import FormatError

T = TypeVar("T")


def _depth(value: Any) -> int:
    if isinstance(value, list) and value:
        return 1 + max(_depth(item) for item in value)
    return 1 if isinstance(value, list) else 0


def _render_value(value: Any, indent: str) -> str:
    if isinstance(value, list) and value and _depth(value) >= 2:
        inner = indent + "  "
        rows = ",\n".join(inner + json.dumps(item) for item in value)
        return "[\n" + rows + "\n" + indent + "]"
    return json.dumps(value)


def dump_document(document: Mapping[str, Any]) -> str:
    """Keys in the given order; nested lists get one element per line."""
    lines = [f'  {json.dumps(key)}: {_render_value(value, "  ")}' for key, value in document.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def parse_document(text: str, kind: type[T], source: str = "<input>") -> T:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None
    try:
        return typedload.load(raw, kind, failonextra=True)
    except TypedloadException as e:
        raise FormatError(f"{source}: {e}") from None


def read_document(path: Path, kind: type[T]) -> T:
    return parse_document(path.read_text(), kind, source=str(path))
