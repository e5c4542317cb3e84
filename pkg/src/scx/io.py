"""Complex files: UTF-8 JSON ``{name?, metadata?, maximal_simplices}``.

The canonical serialization sorts vertices inside each simplex and the
simplex rows lexicographically, writes one row per line, and orders keys
alphabetically, so files diff cleanly and round-trip byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .errors import DuplicateVertexInSimplex, ParseError, ValidationError


@dataclass(frozen=True)
class ComplexFile:
    maximal_simplices: tuple[tuple[int, ...], ...]
    name: str | None = None
    metadata: dict = field(default_factory=dict)

    @property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.maximal_simplices)


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def _row_position(text: str, index: int) -> tuple[int | None, int | None]:
    """Line/column of the ``index``-th row inside the maximal_simplices array."""
    start = text.find('"maximal_simplices"')
    if start < 0:
        return None, None
    pos = text.find("[", start)
    depth, seen, in_str, esc = 0, -1, False, False
    for j in range(pos, len(text)):
        c = text[j]
        if in_str:
            if esc:
                esc = False
            elif c == "\\":
                esc = True
            elif c == '"':
                in_str = False
            continue
        if c == '"':
            in_str = True
        elif c in "[{":
            depth += 1
            if depth == 2:
                seen += 1
                if seen == index:
                    return _line_col(text, j)
        elif c in "]}":
            depth -= 1
            if depth == 0:
                break
    return None, None


def load_document(data: bytes | str) -> ComplexFile:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1, 1)
    unknown = set(doc) - {"name", "metadata", "maximal_simplices"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    rows = doc.get("maximal_simplices")
    if not isinstance(rows, list) or not rows:
        raise ParseError("maximal_simplices must be a nonempty list")
    simplices = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ParseError(f"maximal_simplices[{i}] must be a nonempty list", *_row_position(data, i))
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ParseError(f"maximal_simplices[{i}]: bad vertex id {v!r}", *_row_position(data, i))
        s = tuple(sorted(row))
        if len(set(s)) != len(s):
            raise ValidationError(f"maximal_simplices[{i}] repeats a vertex")
        simplices.append(s)
    if len(set(simplices)) != len(simplices):
        raise ValidationError("duplicate simplexes in maximal_simplices")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata must be an object")
    return ComplexFile(tuple(simplices), name, metadata)


def parse_complex(data: bytes | str) -> SimplicialComplex:
    try:
        return load_document(data).complex
    except DuplicateVertexInSimplex as exc:
        raise ValidationError(str(exc)) from None


def serialize_document(doc: ComplexFile) -> bytes:
    rows = sorted(tuple(sorted(s)) for s in doc.maximal_simplices)
    lines = ["{", '  "maximal_simplices": [']
    lines += ["    " + json.dumps(list(r)) + ("," if i < len(rows) - 1 else "") for i, r in enumerate(rows)]
    lines.append("  ]")
    if doc.metadata:
        lines[-1] += ","
        lines.append('  "metadata": ' + json.dumps(doc.metadata, sort_keys=True))
    if doc.name is not None:
        lines[-1] += ","
        lines.append('  "name": ' + json.dumps(doc.name))
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def serialize_complex(X: SimplicialComplex, name: str | None = None, metadata: dict | None = None) -> bytes:
    """Canonical document listing the maximal simplexes of ``X``."""
    return serialize_document(ComplexFile(X.maximal_simplices, name, metadata or {}))
