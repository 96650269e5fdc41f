"""Independent brute-force checks the real deciders are validated against.

Everything here restates the defining conditions directly, sharing no code
with the package: pattern membership is tested by trying vertex orderings
instead of analyzing degrees, and chordality by scanning subsets instead of
elimination orderings.  Slow and obviously correct is the point.
"""

from itertools import combinations, permutations


def _lab(g, u, v):
    return g.label(u, v)


def quad_is_square_all_two(g, quad):
    for a, b, c, d in permutations(quad):
        if (
            _lab(g, a, b) == 2
            and _lab(g, b, c) == 2
            and _lab(g, c, d) == 2
            and _lab(g, d, a) == 2
            and _lab(g, a, c) is None
            and _lab(g, b, d) is None
        ):
            return True
    return False


def quad_is_open_path3_all_two(g, quad):
    for a, b, c, d in permutations(quad):
        if (
            _lab(g, a, b) == 2
            and _lab(g, b, c) == 2
            and _lab(g, c, d) == 2
            and _lab(g, a, c) is None
            and _lab(g, b, d) is None
            and _lab(g, a, d) is None
        ):
            return True
    return False


def triple_is_bad(g, tri):
    labels = [m for m in (_lab(g, tri[0], tri[1]), _lab(g, tri[0], tri[2]), _lab(g, tri[1], tri[2])) if m is not None]
    connected = len(labels) >= 2
    return connected and sum(1 for m in labels if m == 2) <= 1


def quad_is_square_one_chord(g, quad):
    for a, b, c, d in permutations(quad):
        ac = _lab(g, a, c)
        if (
            _lab(g, a, b) == 2
            and _lab(g, b, c) == 2
            and _lab(g, c, d) == 2
            and _lab(g, d, a) == 2
            and ac is not None
            and ac > 2
            and _lab(g, b, d) is None
        ):
            return True
    return False


def quad_is_square_two_chords(g, quad):
    for a, b, c, d in permutations(quad):
        ac = _lab(g, a, c)
        bd = _lab(g, b, d)
        if (
            _lab(g, a, b) == 2
            and _lab(g, b, c) == 2
            and _lab(g, c, d) == 2
            and _lab(g, d, a) == 2
            and ac is not None
            and ac > 2
            and bd is not None
            and bd > 2
        ):
            return True
    return False


_QUAD_CHECKS = {
    1: quad_is_square_all_two,
    2: quad_is_open_path3_all_two,
    4: quad_is_square_one_chord,
    5: quad_is_square_two_chords,
}


def poison_kinds(g):
    """The set of pattern kinds present anywhere in g, by direct search."""
    kinds = set()
    for tri in combinations(g.vertices, 3):
        if triple_is_bad(g, tri):
            kinds.add(3)
            break
    for kind, check in _QUAD_CHECKS.items():
        for quad in combinations(g.vertices, 4):
            if check(g, quad):
                kinds.add(kind)
                break
    return kinds


def is_poisonous(g):
    for tri in combinations(g.vertices, 3):
        if triple_is_bad(g, tri):
            return True
    for quad in combinations(g.vertices, 4):
        for check in _QUAD_CHECKS.values():
            if check(g, quad):
                return True
    return False


def _subset_is_cycle(g, subset):
    inside = set(subset)
    for v in subset:
        local = [w for w in g.neighbors(v) if w in inside]
        if len(local) != 2:
            return False
    # all degrees 2; connectivity distinguishes one long cycle from several
    start = subset[0]
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in inside and w not in comp:
                comp.add(w)
                stack.append(w)
    return len(comp) == len(subset)


def has_induced_long_cycle(g):
    """True iff some induced cycle of length >= 4 exists (non-chordality)."""
    n = len(g)
    for k in range(4, n + 1):
        for subset in combinations(g.vertices, k):
            if _subset_is_cycle(g, subset):
                return True
    return False


def full_path_violations(g):
    """All induced non-closed paths of length > 1 that are not all-2 paths of
    length exactly 2, found by trying every vertex ordering of every subset.

    Returns a set of frozensets of vertices, one per offending path support.
    """
    bad = set()
    n = len(g)
    for k in range(3, n + 1):
        for subset in combinations(g.vertices, k):
            for order in permutations(subset):
                if order[0] > order[-1]:
                    continue
                ok = True
                for i in range(k):
                    for j in range(i + 1, k):
                        m = _lab(g, order[i], order[j])
                        if j == i + 1:
                            if m is None:
                                ok = False
                        else:
                            if m is not None:
                                ok = False
                    if not ok:
                        break
                if not ok:
                    continue
                labels = [_lab(g, order[i], order[i + 1]) for i in range(k - 1)]
                if k > 3 or any(m != 2 for m in labels):
                    bad.add(frozenset(subset))
                break
    return bad
