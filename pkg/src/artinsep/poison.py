"""Detection of the five graph patterns that obstruct subgroup separability.

An Artin group is LERF exactly when its defining graph contains none of the
following as a full (induced) subgraph:

  kind 1  a square (4-cycle) with all four edges labeled 2 and no chords
  kind 2  a non-closed path on four vertices, all three edges labeled 2
  kind 3  a connected triple with at most one edge labeled 2
  kind 4  an all-2 square plus exactly one chord, the chord labeled > 2
  kind 5  a complete 4-set: an all-2 square with both chords labeled > 2

A graph containing any of them is called poisonous.  Each detector returns a
witness naming the offending vertices, and ``verify_witness`` re-checks a
witness against the graph using logic deliberately kept separate from the
detectors, so one can certify the other.

The search is a plain scan of all 3- and 4-vertex subsets, in lexicographic
order of the sorted vertex tuples, first match wins.  That keeps witnesses
canonical and golden tests stable; at 64 vertices and below there is nothing
to gain from cleverer subgraph matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

from .graph import LabeledGraph


class PoisonKind(IntEnum):
    SQUARE_ALL_TWO = 1
    OPEN_PATH3_ALL_TWO = 2
    BAD_TRIPLE = 3
    SQUARE_ONE_CHORD = 4
    SQUARE_TWO_CHORDS = 5


@dataclass(frozen=True)
class PoisonWitness:
    """A vertex tuple certifying one poisonous pattern.

    Kind 3 lists its three vertices sorted.  Kind 2 lists the path in order,
    starting from the lexicographically smaller endpoint.  Kinds 1, 4 and 5
    list the square in cyclic order; chords, when present, join positions
    1-3 and 2-4 of the tuple.
    """

    kind: PoisonKind
    vertices: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {"kind": int(self.kind), "vertices": list(self.vertices)}


def witness_from_json_dict(doc: dict) -> PoisonWitness:
    return PoisonWitness(PoisonKind(doc["kind"]), tuple(doc["vertices"]))


def _classify_quad(g: LabeledGraph, quad: tuple[str, ...]):
    """Match the induced subgraph on a sorted 4-tuple against kinds 1, 2, 4, 5.

    Returns ``(kind, canonical tuple)`` or None.  The four kinds have 3, 4,
    5 and 6 induced edges respectively, so a single 4-set matches at most
    one of them.
    """
    pl = g._pair_labels
    a, b, c, d = quad
    pairs = ((a, b), (a, c), (a, d), (b, c), (b, d), (c, d))
    labels = tuple(pl.get(p) for p in pairs)
    count = 6 - labels.count(None)

    if count == 3:
        # Open path needs degree multiset {1,1,2,2}; stars and triangles with
        # an isolated vertex also have three edges and are excluded here.
        deg = {v: 0 for v in quad}
        for p, m in zip(pairs, labels):
            if m is not None:
                if m != 2:
                    return None
                deg[p[0]] += 1
                deg[p[1]] += 1
        ends = [v for v in quad if deg[v] == 1]
        if len(ends) != 2:
            return None
        adj = {v: [] for v in quad}
        for p, m in zip(pairs, labels):
            if m is not None:
                adj[p[0]].append(p[1])
                adj[p[1]].append(p[0])
        start = min(ends)
        path = [start, adj[start][0]]
        while len(path) < 4:
            nxt = [w for w in adj[path[-1]] if w != path[-2]]
            if not nxt:
                return None
            path.append(nxt[0])
        return PoisonKind.OPEN_PATH3_ALL_TWO, tuple(path)

    if count == 4:
        # Four edges with every degree 2 on four vertices is exactly a 4-cycle.
        deg = {v: 0 for v in quad}
        for p, m in zip(pairs, labels):
            if m is not None:
                if m != 2:
                    return None
                deg[p[0]] += 1
                deg[p[1]] += 1
        if any(deg[v] != 2 for v in quad):
            return None
        nbr_a = [v for v in (b, c, d) if pl.get((a, v)) is not None]
        v1 = min(nbr_a)
        v3 = max(nbr_a)
        v2 = next(v for v in (b, c, d) if v != v1 and v != v3)
        return PoisonKind.SQUARE_ALL_TWO, (a, v1, v2, v3)

    if count == 5:
        # Square plus one chord: the chord joins the two degree-3 vertices;
        # the missing pair joins the two degree-2 vertices.
        deg = {v: 0 for v in quad}
        for p, m in zip(pairs, labels):
            if m is not None:
                deg[p[0]] += 1
                deg[p[1]] += 1
        chord_ends = sorted(v for v in quad if deg[v] == 3)
        others = sorted(v for v in quad if deg[v] == 2)
        if len(chord_ends) != 2:
            return None
        ckey = tuple(chord_ends)
        if pl[ckey] <= 2:
            return None
        for p, m in zip(pairs, labels):
            if m is not None and p != ckey and m != 2:
                return None
        return PoisonKind.SQUARE_ONE_CHORD, (chord_ends[0], others[0], chord_ends[1], others[1])

    if count == 6:
        big = [p for p, m in zip(pairs, labels) if m > 2]
        if len(big) != 2:
            return None
        if set(big[0]) & set(big[1]):
            return None
        mate = dict(big)
        mate.update((v, u) for u, v in big)
        v2 = mate[a]
        rest = sorted(v for v in (b, c, d) if v != v2)
        return PoisonKind.SQUARE_TWO_CHORDS, (a, rest[0], v2, rest[1])

    return None


def _scan_quads(g: LabeledGraph, kind: PoisonKind) -> PoisonWitness | None:
    for quad in combinations(g.vertices, 4):
        res = _classify_quad(g, quad)
        if res is not None and res[0] is kind:
            return PoisonWitness(res[0], res[1])
    return None


def find_square_all_two(g: LabeledGraph) -> PoisonWitness | None:
    """First induced chordless 4-cycle with all labels 2 (kind 1)."""
    return _scan_quads(g, PoisonKind.SQUARE_ALL_TWO)


def find_open_path3_all_two(g: LabeledGraph) -> PoisonWitness | None:
    """First induced open path on 4 vertices with all labels 2 (kind 2)."""
    return _scan_quads(g, PoisonKind.OPEN_PATH3_ALL_TWO)


def find_bad_triple(g: LabeledGraph) -> PoisonWitness | None:
    """First connected 3-set with at most one of its edges labeled 2 (kind 3).

    "At most one" counts the triple's own edges carrying label 2, so a
    connected triple with two or three 2-labeled edges is harmless.
    """
    pl = g._pair_labels
    for tri in combinations(g.vertices, 3):
        a, b, c = tri
        ls = [m for m in (pl.get((a, b)), pl.get((a, c)), pl.get((b, c))) if m is not None]
        if len(ls) >= 2 and sum(1 for m in ls if m == 2) <= 1:
            return PoisonWitness(PoisonKind.BAD_TRIPLE, tri)
    return None


def find_square_one_chord(g: LabeledGraph) -> PoisonWitness | None:
    """First induced all-2 square with exactly one chord labeled > 2 (kind 4)."""
    return _scan_quads(g, PoisonKind.SQUARE_ONE_CHORD)


def find_square_two_chords(g: LabeledGraph) -> PoisonWitness | None:
    """First induced complete 4-set whose two disjoint chords are labeled > 2
    and whose other four edges are labeled 2 (kind 5)."""
    return _scan_quads(g, PoisonKind.SQUARE_TWO_CHORDS)


def find_poison(g: LabeledGraph) -> PoisonWitness | None:
    """First poisonous witness in kind order 1..5, or None.

    Equivalent to running the five detectors in order; the 4-subset scan is
    shared across kinds 1, 2, 4, 5 since a fixed 4-set matches at most one
    of them (their edge counts differ).
    """
    first: dict[PoisonKind, PoisonWitness] = {}
    for quad in combinations(g.vertices, 4):
        res = _classify_quad(g, quad)
        if res is None:
            continue
        kind, tup = res
        if kind is PoisonKind.SQUARE_ALL_TWO:
            return PoisonWitness(kind, tup)
        first.setdefault(kind, PoisonWitness(kind, tup))
    if PoisonKind.OPEN_PATH3_ALL_TWO in first:
        return first[PoisonKind.OPEN_PATH3_ALL_TWO]
    triple = find_bad_triple(g)
    if triple is not None:
        return triple
    for kind in (PoisonKind.SQUARE_ONE_CHORD, PoisonKind.SQUARE_TWO_CHORDS):
        if kind in first:
            return first[kind]
    return None


def verify_witness(g: LabeledGraph, w: PoisonWitness) -> bool:
    """Re-check a witness against the graph, independently of the detectors.

    The tuple is interpreted under the ordering documented on PoisonWitness.
    Returns False (never raises) on malformed witnesses, including vertices
    not in the graph.
    """
    vs = w.vertices
    need = 3 if w.kind is PoisonKind.BAD_TRIPLE else 4
    if len(vs) != need or len(set(vs)) != need:
        return False
    if any(v not in g for v in vs):
        return False
    lab = g.label

    if w.kind is PoisonKind.BAD_TRIPLE:
        a, b, c = vs
        present = [m for m in (lab(a, b), lab(a, c), lab(b, c)) if m is not None]
        return len(present) >= 2 and sum(1 for m in present if m == 2) <= 1

    v0, v1, v2, v3 = vs
    ring = (lab(v0, v1), lab(v1, v2), lab(v2, v3), lab(v3, v0))
    d02 = lab(v0, v2)
    d13 = lab(v1, v3)

    if w.kind is PoisonKind.SQUARE_ALL_TWO:
        return all(m == 2 for m in ring) and d02 is None and d13 is None
    if w.kind is PoisonKind.OPEN_PATH3_ALL_TWO:
        path = (lab(v0, v1), lab(v1, v2), lab(v2, v3))
        return (all(m == 2 for m in path) and d02 is None and d13 is None
                and lab(v0, v3) is None)
    if w.kind is PoisonKind.SQUARE_ONE_CHORD:
        return (all(m == 2 for m in ring) and d02 is not None and d02 > 2
                and d13 is None)
    if w.kind is PoisonKind.SQUARE_TWO_CHORDS:
        return (all(m == 2 for m in ring) and d02 is not None and d02 > 2
                and d13 is not None and d13 > 2)
    return False
