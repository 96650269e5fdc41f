"""Textual and JSON formats for labeled graphs.

The line format (``.artin``) is deliberately minimal so files diff cleanly
and are trivial to generate::

    # comment to end of line
    vertex NAME
    edge NAME NAME INT

Tokens are whitespace-separated, blank lines are ignored, LF and CRLF are
both accepted and LF is emitted.  Edge endpoints not declared by a ``vertex``
line are declared implicitly; re-declaring a known vertex is an error, which
catches generator typos early.  Labels are decimal integers in
``[2, 2**31 - 1]``; out-of-range values are reported as errors rather than
clamped.

The JSON schema is ``{"vertices": [names], "edges": [{"u":, "v":, "m":}]}``
with vertices sorted and edges sorted by ``(u, v)``, ``u < v``, on emit.
Both formats round-trip losslessly, and canonical serialization depends only
on the graph value, never on construction order.
"""

from __future__ import annotations

import json
import re
from enum import Enum

from .graph import (
    MAX_LABEL,
    MAX_VERTICES,
    MIN_LABEL,
    NAME_PATTERN,
    DuplicateEdgeError,
    DuplicateVertexError,
    GraphError,
    GraphTooLargeError,
    InvalidVertexNameError,
    LabeledGraph,
    LabelTooLargeError,
    LabelTooSmallError,
    SelfLoopError,
    UnknownVertexError,
)

_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"[0-9]+\Z")


class ErrorKind(str, Enum):
    SYNTAX = "Syntax"
    SCHEMA = "Schema"
    DUPLICATE_VERTEX_DECL = "DuplicateVertexDecl"
    DUPLICATE_EDGE = "DuplicateEdge"
    SELF_LOOP = "SelfLoop"
    LABEL_TOO_SMALL = "LabelTooSmall"
    LABEL_TOO_LARGE = "LabelTooLarge"
    UNKNOWN_ENDPOINT = "UnknownEndpoint"
    GRAPH_TOO_LARGE = "GraphTooLarge"


class SourceError(Exception):
    """A parse failure, carrying a 1-based position into the offending input."""

    def __init__(self, line: int, column: int, kind: ErrorKind, message: str):
        super().__init__(f"{line}:{column}: {kind.value}: {message}")
        self.line = line
        self.column = column
        self.kind = kind
        self.message = message


_GRAPH_ERROR_KINDS: dict[type, ErrorKind] = {
    SelfLoopError: ErrorKind.SELF_LOOP,
    DuplicateEdgeError: ErrorKind.DUPLICATE_EDGE,
    DuplicateVertexError: ErrorKind.DUPLICATE_VERTEX_DECL,
    LabelTooSmallError: ErrorKind.LABEL_TOO_SMALL,
    LabelTooLargeError: ErrorKind.LABEL_TOO_LARGE,
    UnknownVertexError: ErrorKind.UNKNOWN_ENDPOINT,
    GraphTooLargeError: ErrorKind.GRAPH_TOO_LARGE,
    InvalidVertexNameError: ErrorKind.SCHEMA,
}


def _kind_of(exc: GraphError) -> ErrorKind:
    return _GRAPH_ERROR_KINDS.get(type(exc), ErrorKind.SCHEMA)


def parse_artin(text: str) -> LabeledGraph:
    """Parse the ``.artin`` line format.

    Raises SourceError with a 1-based line/column on any malformed input;
    never raises anything else on string input.
    """
    vertices: set[str] = set()
    edges: list[tuple[str, str, int]] = []
    seen_pairs: set[tuple[str, str]] = set()

    def declare(name: str, lineno: int, col: int) -> None:
        vertices.add(name)
        if len(vertices) > MAX_VERTICES:
            raise SourceError(lineno, col, ErrorKind.GRAPH_TOO_LARGE,
                              f"more than {MAX_VERTICES} vertices")

    def check_name(tok: str, lineno: int, col: int) -> str:
        if not NAME_PATTERN.match(tok):
            raise SourceError(lineno, col, ErrorKind.SYNTAX, f"invalid name {tok!r}")
        return tok

    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw[:-1] if raw.endswith("\r") else raw
        cut = line.find("#")
        if cut >= 0:
            line = line[:cut]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword, kcol = tokens[0]
        if keyword == "vertex":
            if len(tokens) != 2:
                col = tokens[2][1] if len(tokens) > 2 else len(line) + 1
                raise SourceError(lineno, col, ErrorKind.SYNTAX,
                                  "expected: vertex NAME")
            name, ncol = tokens[1]
            check_name(name, lineno, ncol)
            if name in vertices:
                raise SourceError(lineno, ncol, ErrorKind.DUPLICATE_VERTEX_DECL,
                                  f"vertex {name!r} is already declared")
            declare(name, lineno, ncol)
        elif keyword == "edge":
            if len(tokens) != 4:
                col = tokens[4][1] if len(tokens) > 4 else len(line) + 1
                raise SourceError(lineno, col, ErrorKind.SYNTAX,
                                  "expected: edge NAME NAME INT")
            (u, ucol), (v, vcol), (mtok, mcol) = tokens[1], tokens[2], tokens[3]
            check_name(u, lineno, ucol)
            check_name(v, lineno, vcol)
            if u == v:
                raise SourceError(lineno, vcol, ErrorKind.SELF_LOOP,
                                  f"self-loop at vertex {u!r}")
            if not _INT.match(mtok):
                raise SourceError(lineno, mcol, ErrorKind.SYNTAX,
                                  f"invalid label {mtok!r}, expected a decimal integer")
            m = int(mtok)
            if m < MIN_LABEL:
                raise SourceError(lineno, mcol, ErrorKind.LABEL_TOO_SMALL,
                                  f"label must be >= {MIN_LABEL}, got {m}")
            if m > MAX_LABEL:
                raise SourceError(lineno, mcol, ErrorKind.LABEL_TOO_LARGE,
                                  f"label must be <= {MAX_LABEL}, got {m}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen_pairs:
                raise SourceError(lineno, ucol, ErrorKind.DUPLICATE_EDGE,
                                  f"edge {pair[0]}-{pair[1]} appears twice")
            seen_pairs.add(pair)
            if u not in vertices:
                declare(u, lineno, ucol)
            if v not in vertices:
                declare(v, lineno, vcol)
            edges.append((u, v, m))
        else:
            raise SourceError(lineno, kcol, ErrorKind.SYNTAX,
                              f"unknown directive {keyword!r}")
    return LabeledGraph(sorted(vertices), edges)


def serialize_artin(g: LabeledGraph) -> str:
    """Canonical ``.artin`` text: sorted vertex lines, then sorted edge lines."""
    parts = [f"vertex {v}\n" for v in g.vertices]
    parts.extend(f"edge {u} {v} {m}\n" for u, v, m in g.edges())
    return "".join(parts)


def graph_to_json(g: LabeledGraph) -> str:
    """Compact canonical JSON form of the graph."""
    doc = {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "m": m} for u, v, m in g.edges()],
    }
    return json.dumps(doc, separators=(",", ":"))


def graph_from_json(text: str) -> LabeledGraph:
    """Parse the JSON graph schema; SourceError on syntax or schema violations."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SourceError(exc.lineno, exc.colno, ErrorKind.SYNTAX, exc.msg) from None

    def schema(msg: str) -> SourceError:
        return SourceError(1, 1, ErrorKind.SCHEMA, msg)

    if not isinstance(doc, dict):
        raise schema("top-level value must be an object")
    if set(doc) != {"vertices", "edges"}:
        raise schema('object must have exactly the keys "vertices" and "edges"')
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise schema('"vertices" must be an array of strings')
    if not isinstance(edges, list):
        raise schema('"edges" must be an array')
    triples: list[tuple[str, str, int]] = []
    for e in edges:
        if not isinstance(e, dict) or set(e) != {"u", "v", "m"}:
            raise schema('each edge must be an object with exactly the keys "u", "v", "m"')
        u, v, m = e["u"], e["v"], e["m"]
        if not isinstance(u, str) or not isinstance(v, str):
            raise schema('edge endpoints "u" and "v" must be strings')
        if isinstance(m, bool) or not isinstance(m, int):
            raise schema('edge label "m" must be an integer')
        triples.append((u, v, m))
    try:
        return LabeledGraph(vertices, triples)
    except GraphError as exc:
        raise SourceError(1, 1, _kind_of(exc), str(exc)) from None
