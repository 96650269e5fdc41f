"""Coherence, the ERF property, and the path condition tying them to LERF.

An Artin group is coherent exactly when its defining graph is chordal, every
complete subgraph on 3 or 4 vertices has at most one edge labeled > 2, and
the graph contains no induced all-2 square with a single big chord (poison
kind 4).  It is ERF exactly when the graph is complete with all labels 2.
Among coherent graphs, LERF holds exactly when every induced non-closed path
of length at least 2 has length exactly 2 with both labels 2.

Chordality ignores labels entirely, so it runs on the unlabeled skeleton.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import LabeledGraph
from .poison import PoisonWitness, find_square_one_chord


@dataclass(frozen=True)
class CoherenceReport:
    """Coherence verdict plus whichever obstruction witnesses were found.

    ``coherent`` is true iff ``chordal`` holds and both witnesses below are
    None; all three obstruction fields are computed independently, so a
    non-chordal graph still gets its clique and chord checks.
    """

    coherent: bool
    chordal: bool
    cycle_witness: tuple[str, ...] | None
    clique_witness: tuple[str, ...] | None
    k4_poison_witness: PoisonWitness | None

    def to_json_dict(self) -> dict:
        return {
            "coherent": self.coherent,
            "chordal": self.chordal,
            "cycle_witness": list(self.cycle_witness) if self.cycle_witness else None,
            "clique_witness": list(self.clique_witness) if self.clique_witness else None,
            "k4_poison_witness": (
                self.k4_poison_witness.to_json_dict() if self.k4_poison_witness else None
            ),
        }


class PathViolationReason(str, Enum):
    LENGTH_EXCEEDS_TWO = "LengthExceedsTwo"
    LABEL_NOT_TWO = "LabelNotTwo"


@dataclass(frozen=True)
class PathViolation:
    """An induced non-closed path breaking the coherent-LERF path condition."""

    vertices: tuple[str, ...]
    reason: PathViolationReason

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices), "reason": self.reason.value}


def _lexbfs_order(g: LabeledGraph) -> list[str]:
    # Partition refinement; ties broken lexicographically for determinism.
    order: list[str] = []
    partition: list[list[str]] = [list(g.vertices)] if len(g) else []
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        order.append(v)
        nbrs = g.neighbors(v)
        refined: list[list[str]] = []
        for cell in partition:
            inside = [x for x in cell if x in nbrs]
            outside = [x for x in cell if x not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        partition = refined
    return order


def _canonical_cycle(g: LabeledGraph, subset: tuple[str, ...]) -> tuple[str, ...] | None:
    # Induced cycle test on a subset: every vertex has exactly two neighbors
    # inside, and a walk from the least vertex closes after visiting all.
    inside = set(subset)
    nbrs = {}
    for v in subset:
        local = [w for w in g.neighbors(v) if w in inside]
        if len(local) != 2:
            return None
        nbrs[v] = local
    start = subset[0]
    second = min(nbrs[start])
    walk = [start, second]
    while True:
        a, b = nbrs[walk[-1]]
        nxt = b if a == walk[-2] else a
        if nxt == start:
            break
        walk.append(nxt)
        if len(walk) > len(subset):
            return None
    if len(walk) != len(subset):
        return None
    return tuple(walk)


def is_chordal(g: LabeledGraph) -> tuple[bool, tuple[str, ...] | None]:
    """Decide chordality of the label-stripped skeleton.

    Uses lexicographic BFS: the reverse of any LexBFS order is a perfect
    elimination ordering iff the graph is chordal, which the fill-in check
    below tests directly.  When the graph is not chordal the witness, an
    induced cycle of length >= 4 in cyclic order, is recovered by a separate
    brute-force subset search of increasing size; the elimination ordering
    certifies absence cheaply but a subset scan gives the clearest witness
    at this scale.
    """
    n = len(g)
    if n < 4:
        return True, None
    order = _lexbfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    chordal = True
    for v in order:
        earlier = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        for a, b in combinations(earlier, 2):
            if not g.adjacent(a, b):
                chordal = False
                break
        if not chordal:
            break
    if chordal:
        return True, None
    for k in range(4, n + 1):
        for subset in combinations(g.vertices, k):
            cyc = _canonical_cycle(g, subset)
            if cyc is not None:
                return False, cyc
    raise RuntimeError("elimination check failed but no induced cycle found")


def find_bad_clique(g: LabeledGraph) -> tuple[str, ...] | None:
    """A complete induced 3- or 4-set with at least two edges labeled > 2."""
    pl = g._pair_labels
    for size in (3, 4):
        for subset in combinations(g.vertices, size):
            big = 0
            complete = True
            for pair in combinations(subset, 2):
                m = pl.get(pair)
                if m is None:
                    complete = False
                    break
                if m > 2:
                    big += 1
            if complete and big >= 2:
                return subset
    return None


def is_coherent(g: LabeledGraph) -> CoherenceReport:
    """Full coherence check with all obstruction witnesses attached."""
    chordal, cycle = is_chordal(g)
    clique = find_bad_clique(g)
    k4 = find_square_one_chord(g)
    return CoherenceReport(
        coherent=chordal and clique is None and k4 is None,
        chordal=chordal,
        cycle_witness=cycle,
        clique_witness=clique,
        k4_poison_witness=k4,
    )


def check_path_condition(g: LabeledGraph) -> PathViolation | None:
    """None iff every induced non-closed path of length > 1 is a length-2
    path with both labels 2.

    It suffices to look at induced paths on 3 and 4 vertices: a sub-path of
    an induced path is induced, so any longer violation already contains one
    on 4 vertices.  Label violations are scanned on triples first, then
    length violations on quadruples; within each pass subsets go in
    lexicographic order.
    """
    pl = g._pair_labels
    for tri in combinations(g.vertices, 3):
        a, b, c = tri
        ls = (pl.get((a, b)), pl.get((a, c)), pl.get((b, c)))
        present = [m for m in ls if m is not None]
        # Two edges among three vertices always share a vertex, so exactly
        # two present edges means an induced open path with the missing
        # pair's vertices as endpoints.
        if len(present) != 2 or all(m == 2 for m in present):
            continue
        if ls[0] is None:
            path = (a, c, b)
        elif ls[1] is None:
            path = (a, b, c)
        else:
            path = (b, a, c)
        return PathViolation(path, PathViolationReason.LABEL_NOT_TWO)
    for quad in combinations(g.vertices, 4):
        path = _induced_open_path4(pl, quad)
        if path is not None:
            return PathViolation(path, PathViolationReason.LENGTH_EXCEEDS_TWO)
    return None


def _induced_open_path4(pl, quad) -> tuple[str, ...] | None:
    deg = {v: 0 for v in quad}
    adj = {v: [] for v in quad}
    count = 0
    for pair in combinations(quad, 2):
        if pl.get(pair) is not None:
            count += 1
            u, v = pair
            deg[u] += 1
            deg[v] += 1
            adj[u].append(v)
            adj[v].append(u)
    if count != 3:
        return None
    ends = [v for v in quad if deg[v] == 1]
    if len(ends) != 2:
        return None
    start = min(ends)
    path = [start, adj[start][0]]
    while len(path) < 4:
        nxt = [w for w in adj[path[-1]] if w != path[-2]]
        if not nxt:
            return None
        path.append(nxt[0])
    return tuple(path)


def is_erf(g: LabeledGraph) -> bool:
    """True iff the graph is complete with all labels 2 (free abelian group).

    The empty graph qualifies vacuously: the trivial group is ERF.
    """
    return g.is_complete_all_two()
