"""Scheme files.

A scheme file is one JSON document::

    {"type": "relation_matrix", "name": "pentagon", "n": 5, "d": 2,
     "rows": [[0, 1, 2, 2, 1], ...]}

or, for a graph whose distance partition should be used::

    {"type": "graph", "name": "petersen", "n": 10, "edges": [[0, 2], ...]}

``name`` is optional. Vertices are ``0..n-1``.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .catalog import by_name
from .errors import ParseError
from .scheme_core import (
    RelationTable,
    edges_to_adjacency,
    from_distance_partition,
    validate_axioms,
)

TYPES = ("relation_matrix", "graph")


def _int(value, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", field=field)
    return value


def _row_line(doc_text: str, row: int) -> int | None:
    # best effort: line of the (row+1)-th "[" after "rows"
    start = doc_text.find('"rows"')
    if start < 0:
        return None
    pos = doc_text.find("[", start)
    for _ in range(row + 1):
        pos = doc_text.find("[", pos + 1)
        if pos < 0:
            return None
    return doc_text.count("\n", 0, pos) + 1


def parse_scheme(text: str) -> tuple[str | None, RelationTable]:
    """Parse a scheme document; returns ``(name, table)`` without validating axioms."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    kind = doc.get("type")
    if kind not in TYPES:
        raise ParseError(f"type must be one of {TYPES}, got {kind!r}", field="type")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string", field="name")
    if "n" not in doc:
        raise ParseError("missing field", field="n")
    n = _int(doc["n"], "n")
    if n < 2:
        raise ParseError("n must be >= 2", field="n")

    if kind == "relation_matrix":
        for key in ("d", "rows"):
            if key not in doc:
                raise ParseError("missing field", field=key)
        d = _int(doc["d"], "d")
        rows = doc["rows"]
        if not isinstance(rows, list) or len(rows) != n:
            raise ParseError(f"rows must be a list of {n} rows", field="rows")
        for x, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(
                    f"row {x} must have {n} entries", field=f"rows[{x}]", line=_row_line(text, x)
                )
            for y, v in enumerate(row):
                _int(v, f"rows[{x}][{y}]")
                if not 0 <= v <= d:
                    raise ParseError(
                        f"entry {v} outside 0..{d}",
                        field=f"rows[{x}][{y}]",
                        line=_row_line(text, x),
                    )
        return name, RelationTable(np.array(rows, dtype=np.int64), d)

    if "edges" not in doc:
        raise ParseError("missing field", field="edges")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("edges must be a list of pairs", field="edges")
    for idx, pair in enumerate(edges):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError("edge must be a pair", field=f"edges[{idx}]")
        a, b = (_int(v, f"edges[{idx}]") for v in pair)
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise ParseError(f"bad edge {pair}", field=f"edges[{idx}]")
    return name, from_distance_partition(edges_to_adjacency(n, edges))


def read_scheme(path) -> tuple[str, RelationTable]:
    """Read and validate a scheme file; returns ``(name, table)``."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    name, table = parse_scheme(text)
    validate_axioms(table)
    return name or path.stem, table


def load_scheme(path) -> RelationTable:
    """Load a scheme file and check the axioms.

    Raises
    ------
    ParseError
        Malformed document, with the offending field (and line when known).
    NotAScheme
        And the other axiom errors, propagated from validation.
    """
    return read_scheme(path)[1]


def format_scheme(table: RelationTable, name: str | None = None) -> str:
    """Serialise ``table`` as a relation_matrix document, one row per line."""
    head = {"type": "relation_matrix"}
    if name is not None:
        head["name"] = name
    head.update(n=table.n, d=table.d)
    lines = ["{"]
    lines += [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()]
    lines.append('  "rows": [')
    rows = [json.dumps(r) for r in table.rel.tolist()]
    lines += [f"    {r}," for r in rows[:-1]] + [f"    {rows[-1]}"]
    lines += ["  ]", "}", ""]
    return "\n".join(lines)


def write_atomic(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_catalog(name: str, path) -> None:
    """Write catalog entry ``name`` to ``path``; raises ``UnknownName``."""
    entry = by_name(name)
    write_atomic(path, format_scheme(entry.table, entry.name))
