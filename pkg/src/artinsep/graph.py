"""Immutable labeled graphs: the defining data of an Artin group.

A graph here is finite and simplicial (no self-loops, at most one edge per
vertex pair), with every edge labeled by an integer >= 2.  The absence of an
edge means the two generators satisfy no relation; there is no infinity label.
Vertices are identified by name and every operation orders them
lexicographically, so all results are deterministic.

Graphs are immutable values: constructors validate eagerly, queries are pure,
and instances are safe to share between threads.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

#: Deciders key their memo tables by vertex bitmasks, so graphs are capped
#: at 64 vertices.  Everything of interest lives far below this bound.
MAX_VERTICES = 64

MIN_LABEL = 2
MAX_LABEL = 2**31 - 1


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class InvalidVertexNameError(GraphError):
    """Vertex name does not match ``[A-Za-z_][A-Za-z0-9_]*``."""


class DuplicateVertexError(GraphError):
    """The same vertex name was declared twice."""


class DuplicateEdgeError(GraphError):
    """Two edges were given for the same unordered vertex pair."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class LabelTooSmallError(GraphError):
    """Edge label is not an integer >= 2."""


class LabelTooLargeError(GraphError):
    """Edge label exceeds 2**31 - 1."""


class UnknownVertexError(GraphError):
    """An operation referenced a vertex that is not in the graph."""


class NameCollisionError(GraphError):
    """A combinator would have produced two vertices with the same name."""


class GraphTooLargeError(GraphError):
    """More than 64 vertices."""


def _check_label(m: object) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise LabelTooSmallError(f"edge label must be an integer >= {MIN_LABEL}, got {m!r}")
    if m < MIN_LABEL:
        raise LabelTooSmallError(f"edge label must be >= {MIN_LABEL}, got {m}")
    if m > MAX_LABEL:
        raise LabelTooLargeError(f"edge label must be <= {MAX_LABEL}, got {m}")
    return m


def _check_name(name: object) -> str:
    if not isinstance(name, str) or not NAME_PATTERN.match(name):
        raise InvalidVertexNameError(f"invalid vertex name: {name!r}")
    return name


class LabeledGraph:
    """A finite simplicial graph with edges labeled by integers >= 2.

    Construct with an iterable of vertex names and an iterable of
    ``(u, v, m)`` edge triples.  Validation is eager and complete, so any
    constructed instance satisfies every invariant and deciders never need
    to re-validate.  The empty graph is allowed (its Artin group is
    trivial).
    """

    __slots__ = ("_vertices", "_pair_labels", "_adj", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str, int]] = ()):
        seen: set[str] = set()
        for name in vertices:
            _check_name(name)
            if name in seen:
                raise DuplicateVertexError(f"vertex declared twice: {name}")
            seen.add(name)
        if len(seen) > MAX_VERTICES:
            raise GraphTooLargeError(f"{len(seen)} vertices exceeds the supported maximum of {MAX_VERTICES}")
        names = tuple(sorted(seen))
        adj: dict[str, dict[str, int]] = {v: {} for v in names}
        pair_labels: dict[tuple[str, str], int] = {}
        for u, v, m in edges:
            if u not in adj:
                raise UnknownVertexError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in adj:
                raise UnknownVertexError(f"edge endpoint {v!r} is not a declared vertex")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            _check_label(m)
            key = (u, v) if u < v else (v, u)
            if key in pair_labels:
                raise DuplicateEdgeError(f"duplicate edge {key[0]}-{key[1]}")
            pair_labels[key] = m
            adj[u][v] = m
            adj[v][u] = m
        self._vertices = names
        self._pair_labels = pair_labels
        self._adj = adj
        self._hash: int | None = None

    @classmethod
    def _unchecked(cls, vertices: tuple[str, ...], pair_labels: dict[tuple[str, str], int]) -> "LabeledGraph":
        # Fast path for combinators and generators whose output is valid by
        # construction.  vertices must be sorted and pair keys normalized.
        g = object.__new__(cls)
        adj: dict[str, dict[str, int]] = {v: {} for v in vertices}
        for (u, v), m in pair_labels.items():
            adj[u][v] = m
            adj[v][u] = m
        g._vertices = vertices
        g._pair_labels = pair_labels
        g._adj = adj
        g._hash = None
        return g

    # -- basic queries ---------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertex names in lexicographic order."""
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, name: object) -> bool:
        return name in self._adj

    def edges(self) -> tuple[tuple[str, str, int], ...]:
        """All edges as ``(u, v, m)`` with ``u < v``, sorted by ``(u, v)``."""
        return tuple((u, v, m) for (u, v), m in sorted(self._pair_labels.items()))

    @property
    def edge_count(self) -> int:
        return len(self._pair_labels)

    def _require(self, name: str) -> None:
        if name not in self._adj:
            raise UnknownVertexError(f"unknown vertex: {name!r}")

    def label(self, u: str, v: str) -> int | None:
        """The label of edge ``u-v``, or None if the pair is not adjacent."""
        self._require(u)
        self._require(v)
        return self._adj[u].get(v)

    def adjacent(self, u: str, v: str) -> bool:
        self._require(u)
        self._require(v)
        return v in self._adj[u]

    def neighbors(self, v: str) -> Mapping[str, int]:
        """Mapping of neighbor name to edge label.  Treat as read-only."""
        self._require(v)
        return self._adj[v]

    def degree(self, v: str) -> int:
        self._require(v)
        return len(self._adj[v])

    # -- structural operations -------------------------------------------

    def induced(self, subset: Iterable[str]) -> "LabeledGraph":
        """The full subgraph on ``subset``: all edges with both ends inside."""
        sub = set(subset)
        for v in sub:
            self._require(v)
        names = tuple(sorted(sub))
        labels = {pair: m for pair, m in self._pair_labels.items() if pair[0] in sub and pair[1] in sub}
        return LabeledGraph._unchecked(names, labels)

    def components(self) -> list[tuple[str, ...]]:
        """Connected components as sorted tuples, ordered by smallest member."""
        out: list[tuple[str, ...]] = []
        unseen = set(self._vertices)
        for v in self._vertices:
            if v not in unseen:
                continue
            comp = {v}
            stack = [v]
            unseen.discard(v)
            while stack:
                w = stack.pop()
                for x in self._adj[w]:
                    if x in unseen:
                        unseen.discard(x)
                        comp.add(x)
                        stack.append(x)
            out.append(tuple(sorted(comp)))
        return out

    def center_vertices(self) -> tuple[str, ...]:
        """Vertices 2-adjacent to every other vertex, in lexicographic order.

        For the one-vertex graph the condition is vacuous, so the sole vertex
        is returned; the empty graph has no center.
        """
        n = len(self._vertices)
        if n == 1:
            return self._vertices
        full = n - 1
        return tuple(
            v for v in self._vertices
            if len(self._adj[v]) == full and all(m == 2 for m in self._adj[v].values())
        )

    def is_complete_all_two(self) -> bool:
        """True iff every vertex pair is joined by an edge labeled 2.

        Vacuously true for the empty and one-vertex graphs.  This is exactly
        the condition for the Artin group to be free abelian.
        """
        n = len(self._vertices)
        if len(self._pair_labels) != n * (n - 1) // 2:
            return False
        return all(m == 2 for m in self._pair_labels.values())

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._pair_labels == other._pair_labels

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, tuple(sorted(self._pair_labels.items()))))
        return self._hash

    def __repr__(self) -> str:
        return f"LabeledGraph({list(self._vertices)!r}, {list(self.edges())!r})"


def cone2(g: LabeledGraph, apex: str) -> LabeledGraph:
    """``g`` plus a new apex joined to every vertex of ``g`` by a 2-labeled edge."""
    _check_name(apex)
    if apex in g:
        raise NameCollisionError(f"apex {apex!r} is already a vertex")
    if len(g) + 1 > MAX_VERTICES:
        raise GraphTooLargeError(f"cone would exceed {MAX_VERTICES} vertices")
    labels = dict(g._pair_labels)
    for v in g.vertices:
        labels[(apex, v) if apex < v else (v, apex)] = 2
    return LabeledGraph._unchecked(tuple(sorted(g.vertices + (apex,))), labels)


def disjoint_union(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Union of two graphs on disjoint vertex name sets."""
    overlap = set(g1.vertices) & set(g2.vertices)
    if overlap:
        raise NameCollisionError(f"vertex names shared by both graphs: {sorted(overlap)}")
    if len(g1) + len(g2) > MAX_VERTICES:
        raise GraphTooLargeError(f"union would exceed {MAX_VERTICES} vertices")
    labels = dict(g1._pair_labels)
    labels.update(g2._pair_labels)
    return LabeledGraph._unchecked(tuple(sorted(g1.vertices + g2.vertices)), labels)


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken:
        name += "_"
    return name


def erf_extension(g: LabeledGraph) -> LabeledGraph:
    """``g`` plus two fresh vertices, each 2-adjacent to all of ``g`` and joined
    to each other by a 3-labeled edge.

    The Artin group of the result is the direct product of the old group with
    the group of a single 3-labeled edge, which is always LERF.  The extension
    is poisonous exactly when ``g`` fails to be complete with all labels 2,
    which is what makes it a probe for the ERF property.  Fresh names are
    ``w1``/``w2``, suffixed with underscores on collision.
    """
    if len(g) + 2 > MAX_VERTICES:
        raise GraphTooLargeError(f"extension would exceed {MAX_VERTICES} vertices")
    w1 = _fresh_name("w1", g.vertices)
    w2 = _fresh_name("w2", g.vertices)
    labels = dict(g._pair_labels)
    for w in (w1, w2):
        for v in g.vertices:
            labels[(w, v) if w < v else (v, w)] = 2
    labels[(w1, w2) if w1 < w2 else (w2, w1)] = 3
    return LabeledGraph._unchecked(tuple(sorted(g.vertices + (w1, w2))), labels)
