"""Germ files: JSON documents validated by the GermFile model.

Serialization is canonical (fixed key order, elements by id, products
sorted, two-space indent, trailing newline), so parse and serialize are
inverse to each other on canonical text.
"""

import logging
from pathlib import Path

from pydantic import ValidationError

from .errors import StructuralError
from .germ import Element, GermTable
from .models import ElementEntry, GermFile

logger = logging.getLogger(__name__)


def describe_validation_error(error: ValidationError) -> str:
    """One line per problem: field path, then pydantic's message (which carries JSON line/column)."""
    lines = []
    for problem in error.errors():
        location = ".".join(str(part) for part in problem["loc"]) or "<document>"
        lines.append(f"{location}: {problem['msg']}")
    return "; ".join(lines)


def to_germ_file(table: GermTable) -> GermFile:
    names = table.objects
    return GermFile(
        objects=list(names),
        elements=[
            ElementEntry(id=i, name=e.name, source=names[e.source], target=names[e.target])
            for i, e in enumerate(table.elements)
        ],
        identities={names[obj]: element_id for obj, element_id in enumerate(table.identities)},
        products=[(f, g, h) for (f, g), h in sorted(table.products.items())],
    )


def from_germ_file(document: GermFile) -> GermTable:
    object_index = {name: i for i, name in enumerate(document.objects)}
    return GermTable(
        objects=tuple(document.objects),
        elements=tuple(
            Element(entry.name, object_index[entry.source], object_index[entry.target])
            for entry in document.elements
        ),
        identities=tuple(document.identities[name] for name in document.objects),
        products={(f, g): h for f, g, h in document.products},
    )


def parse_germ(text: str | bytes) -> GermTable:
    """Parse germ file text.

    Raises:
        StructuralError: invalid JSON, wrong field types or an inconsistent table.
    """
    try:
        document = GermFile.model_validate_json(text)
    except ValidationError as e:
        raise StructuralError(describe_validation_error(e)) from e
    return from_germ_file(document)


def serialize_germ(table: GermTable) -> str:
    return to_germ_file(table).model_dump_json(indent=2) + "\n"


def load_germ(path: str | Path) -> GermTable:
    path = Path(path)
    logger.debug("Loading germ file %s", path)
    try:
        return parse_germ(path.read_bytes())
    except StructuralError as e:
        raise StructuralError(f"{path}: {e}") from e


def dump_germ(table: GermTable, path: str | Path) -> None:
    path = Path(path)
    path.write_text(serialize_germ(table), encoding="utf-8")
    logger.debug("Wrote %d-element germ to %s", table.size, path)
