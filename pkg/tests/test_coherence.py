from itertools import chain, combinations

from artinsep import (
    LabeledGraph,
    PathViolation,
    PathViolationReason,
    PoisonKind,
    check_path_condition,
    enumerate_graphs,
    erf_extension,
    find_bad_clique,
    find_poison,
    is_chordal,
    is_coherent,
    is_erf,
    random_graph,
    verify_witness,
)
from gbuild import G, P4_ALL_TWO, SQUARE_ALL_TWO, complete_graph, cycle_graph, path_graph
from oracles import full_path_violations, has_induced_long_cycle


def _family(max_n, labels):
    return chain.from_iterable(enumerate_graphs(n, labels) for n in range(1, max_n + 1))


def _skeletons(n):
    """Every unlabeled graph on n vertices, encoded with all labels 2."""
    yield from enumerate_graphs(n, (2,))


# -- chordality ------------------------------------------------------------

def test_square_is_the_basic_non_chordal_graph():
    assert is_chordal(SQUARE_ALL_TWO) == (False, ("a", "b", "c", "d"))


def test_complete_graphs_are_chordal():
    assert is_chordal(complete_graph(4, label=5)) == (True, None)


def test_empty_graph_and_forests_are_chordal():
    assert is_chordal(LabeledGraph()) == (True, None)
    assert is_chordal(path_graph([2, 3, 2, 4])) == (True, None)
    assert is_chordal(G("ab2", "ac2", "ad2", "ae2")) == (True, None)


def test_five_cycle_witness():
    chordal, cyc = is_chordal(cycle_graph([2] * 5))
    assert not chordal
    assert cyc == ("a", "b", "c", "d", "e")


def test_wheel_with_hole():
    # 5-cycle plus an apex adjacent to everything: still has the induced 5-hole
    g = G("ab2", "bc2", "cd2", "de2", "ae2", "za2", "zb2", "zc2", "zd2", "ze2")
    chordal, cyc = is_chordal(g)
    assert not chordal
    assert len(cyc) == 5 and "z" not in cyc


def test_chordality_matches_subset_oracle_exhaustively():
    for n in range(1, 6):
        for g in _skeletons(n):
            assert is_chordal(g)[0] == (not has_induced_long_cycle(g)), g


def test_cycle_witnesses_are_induced_cycles():
    for seed in range(60):
        g = random_graph(7, (2,), 0.45, seed=seed)
        chordal, cyc = is_chordal(g)
        if chordal:
            continue
        k = len(cyc)
        assert k >= 4
        for i in range(k):
            for j in range(i + 1, k):
                expected = (j - i == 1) or (i == 0 and j == k - 1)
                assert (g.label(cyc[i], cyc[j]) is not None) == expected


# -- bad cliques ---------------------------------------------------------------

def test_triangle_two_big_labels_is_bad():
    g = G("ab3", "bc3", "ac2")
    # derive by scanning all triples for completeness plus two big labels
    hits = [
        tri for tri in combinations(g.vertices, 3)
        if all(g.label(*p) is not None for p in combinations(tri, 2))
        and sum(1 for p in combinations(tri, 2) if g.label(*p) > 2) >= 2
    ]
    assert hits == [("a", "b", "c")]
    assert find_bad_clique(g) == ("a", "b", "c")


def test_triangle_one_big_label_is_fine():
    assert find_bad_clique(G("ab2", "bc2", "ac5")) is None


def test_all_two_k4_is_fine():
    assert find_bad_clique(complete_graph(4)) is None


def test_k4_with_disjoint_big_chords_is_bad_only_as_a_quadruple():
    g = G("ab2", "bc2", "cd2", "ad2", "ac3", "bd5")
    assert find_bad_clique(g) == ("a", "b", "c", "d")


# -- is_coherent -------------------------------------------------------------------

def test_all_two_path_is_coherent():
    rep = is_coherent(P4_ALL_TWO)
    # definition scan: chordal, no complete triple or quadruple, no chorded square
    assert is_chordal(P4_ALL_TWO)[0]
    assert find_bad_clique(P4_ALL_TWO) is None
    assert rep.coherent and rep.chordal
    assert rep.cycle_witness is None and rep.clique_witness is None and rep.k4_poison_witness is None


def test_chorded_square_breaks_coherence_via_kind_four():
    rep = is_coherent(G("ab2", "bc2", "cd2", "ad2", "ac3"))
    assert not rep.coherent
    assert rep.chordal
    assert rep.k4_poison_witness is not None
    assert rep.k4_poison_witness.kind is PoisonKind.SQUARE_ONE_CHORD


def test_bad_clique_breaks_coherence():
    rep = is_coherent(G("ab3", "bc3", "ac2"))
    assert not rep.coherent and rep.clique_witness == ("a", "b", "c")


def test_coherence_report_internal_consistency_and_witnesses():
    for seed in range(80):
        g = random_graph(7, (2, 3), 0.5, seed=seed)
        rep = is_coherent(g)
        assert rep.coherent == (rep.chordal and rep.clique_witness is None and rep.k4_poison_witness is None)
        if rep.clique_witness is not None:
            pairs = list(combinations(rep.clique_witness, 2))
            assert all(g.label(*p) is not None for p in pairs)
            assert sum(1 for p in pairs if g.label(*p) > 2) >= 2
        if rep.k4_poison_witness is not None:
            assert verify_witness(g, rep.k4_poison_witness)


# -- path condition ------------------------------------------------------------------

def test_all_two_length_two_path_is_allowed():
    assert check_path_condition(path_graph([2, 2])) is None


def test_label_violation():
    assert check_path_condition(path_graph([2, 3])) == PathViolation(
        ("a", "b", "c"), PathViolationReason.LABEL_NOT_TWO)


def test_length_violation():
    assert check_path_condition(P4_ALL_TWO) == PathViolation(
        ("a", "b", "c", "d"), PathViolationReason.LENGTH_EXCEEDS_TWO)


def test_closed_square_has_no_open_path_violation():
    assert check_path_condition(SQUARE_ALL_TWO) is None


def test_path_condition_matches_full_path_oracle():
    for g in _family(4, (2, 3)):
        assert (check_path_condition(g) is None) == (not full_path_violations(g)), g
    for seed in range(40):
        g = random_graph(6, (2, 3), 0.5, seed=seed)
        assert (check_path_condition(g) is None) == (not full_path_violations(g)), g


def test_path_violation_tuple_is_an_induced_path():
    for seed in range(60):
        g = random_graph(7, (2, 3, 4), 0.4, seed=seed)
        v = check_path_condition(g)
        if v is None:
            continue
        vs = v.vertices
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                assert (g.label(vs[i], vs[j]) is not None) == (j == i + 1)
        if v.reason is PathViolationReason.LABEL_NOT_TWO:
            assert len(vs) == 3
            assert any(g.label(vs[i], vs[i + 1]) != 2 for i in range(2))
        else:
            assert len(vs) == 4


# -- ERF ---------------------------------------------------------------------------

def test_is_erf_examples():
    assert is_erf(complete_graph(4))
    assert not is_erf(G("ab3"))
    assert is_erf(LabeledGraph())
    assert is_erf(LabeledGraph(["a"]))


def test_erf_implies_lerf_small_exhaustive():
    for g in _family(4, (2, 3)):
        if is_erf(g):
            assert find_poison(g) is None


def test_erf_extension_probe_small_exhaustive():
    for g in _family(3, (2, 3)):
        extended = erf_extension(g)
        if is_erf(g):
            assert find_poison(extended) is None, g
        else:
            assert find_poison(extended) is not None, g


# -- the coherence side of the LERF link -----------------------------------------------

def test_lerf_implies_coherent_small_exhaustive():
    for g in _family(4, (2, 3)):
        if find_poison(g) is None:
            assert is_coherent(g).coherent, g


def test_path_condition_characterizes_lerf_among_coherent_graphs():
    for g in _family(4, (2, 3)):
        if is_coherent(g).coherent:
            assert (check_path_condition(g) is None) == (find_poison(g) is None), g
