"""Reading and writing the interchange document and report documents.

The interchange document is UTF-8 JSON whose top-level keys mirror the
drawing description, in this order: ``vertices``, ``edges``, ``chains``,
``crossings``, ``rotations``.  Rotation lists are cyclic; the first element
is the canonical anchor, and the emitter always anchors at the smallest
entry, so emitting is byte-stable and emit-then-parse is the identity on
canonical specs.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from . import __version__
from .drawing import DrawingSpec, spec_violations
from .errors import InvariantError, ParseError

_FIELDS = ("vertices", "edges", "chains", "crossings", "rotations")


def spec_from_document(doc: Any) -> DrawingSpec:
    """Validate a parsed JSON value and build the canonical spec from it."""
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    missing = [k for k in _FIELDS if k not in doc]
    if missing:
        raise ParseError(f"missing field(s): {missing}")

    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise ParseError("field 'vertices' must be a non-empty list")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError("field 'edges' must be a list")
    for row in edges:
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(f"field 'edges' rows must be [id, end_a, end_b]; got {row!r}")
    for name in ("chains", "crossings", "rotations"):
        if not isinstance(doc[name], dict):
            raise ParseError(f"field '{name}' must be an object")
    for e, cs in doc["chains"].items():
        if not isinstance(cs, list):
            raise ParseError(f"chain of edge {e} must be a list")
    for c, pair in doc["crossings"].items():
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"crossing {c} must list exactly two edges")
    for node, rot in doc["rotations"].items():
        if not isinstance(rot, list):
            raise ParseError(f"rotation at {node} must be a list")
        for item in rot:
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError(f"rotation entries at {node} must be [edge, '+'|'-']")

    spec = DrawingSpec.build(
        vertices=vertices,
        edges=edges,
        chains=doc["chains"],
        crossings=doc["crossings"],
        rotations=doc["rotations"],
    )
    problems = spec_violations(spec)
    if problems:
        first = problems[0]
        raise InvariantError(first.rule, first.detail)
    return spec


def parse_text(text: str) -> DrawingSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return spec_from_document(doc)


def parse_drawing(path: str | Path) -> DrawingSpec:
    """Load an interchange file; the result satisfies every drawing invariant."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_text(text)


def emit_drawing(spec: DrawingSpec) -> str:
    """Canonical interchange text for a spec (documented key order, 2-space indent)."""
    return json.dumps(spec.to_doc(), indent=2) + "\n"


def input_digest(spec: DrawingSpec) -> str:
    return "sha256:" + hashlib.sha256(emit_drawing(spec).encode("utf-8")).hexdigest()


def report_document(spec: DrawingSpec, sections: dict[str, Any], include_drawing: bool = True) -> dict:
    """Assemble a report: tool version, input digest, the drawing, then sections."""
    doc: dict[str, Any] = {"version": __version__, "input_digest": input_digest(spec)}
    if include_drawing:
        doc["drawing"] = spec.to_doc()
    for name, payload in sections.items():
        doc[name] = payload
    return doc


def emit_report(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
