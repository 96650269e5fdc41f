import pytest

from artinsep import (
    CensusResult,
    CensusSpec,
    Exhaustive,
    LabeledGraph,
    Sampled,
    TooManyGraphsError,
    enumerate_graphs,
    random_graph,
    run_census,
    serialize_artin,
)
from artinsep.census import classify_into, derive_seed
from gbuild import complete_graph
from oracles import is_poisonous


# -- enumeration -----------------------------------------------------------

def test_enumerate_two_vertices():
    graphs = list(enumerate_graphs(2, (2, 3)))
    assert len(graphs) == 3
    assert graphs[0] == LabeledGraph(["v1", "v2"])
    assert graphs[1] == LabeledGraph(["v1", "v2"], [("v1", "v2", 2)])
    assert graphs[2] == LabeledGraph(["v1", "v2"], [("v1", "v2", 3)])


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_graphs(3, (2, 3))) == 27
    assert sum(1 for _ in enumerate_graphs(1, (2, 3, 4))) == 1
    assert sum(1 for _ in enumerate_graphs(4, (2,))) == 64


def test_enumeration_has_no_duplicates():
    seen = {serialize_artin(g) for g in enumerate_graphs(3, (2, 3))}
    assert len(seen) == 27
    seen4 = {serialize_artin(g) for g in enumerate_graphs(4, (2,))}
    assert len(seen4) == 64


def test_enumeration_bounds():
    with pytest.raises(TooManyGraphsError):
        list(enumerate_graphs(99, (2,)))
    with pytest.raises(TooManyGraphsError):
        list(enumerate_graphs(7, (2, 3)))  # 3^21 graphs
    CensusSpec(6, (2, 3), Exhaustive())  # 3^15 is within the bound


def test_invalid_specs():
    with pytest.raises(ValueError):
        CensusSpec(0, (2,), Exhaustive())
    with pytest.raises(ValueError):
        CensusSpec(3, (), Exhaustive())
    with pytest.raises(ValueError):
        CensusSpec(3, (1, 2), Exhaustive())
    with pytest.raises(ValueError):
        CensusSpec(3, (2,), Sampled(samples=0, seed=0, edge_prob=0.5))
    with pytest.raises(ValueError):
        CensusSpec(3, (2,), Sampled(samples=5, seed=0, edge_prob=1.5))
    with pytest.raises(ValueError):
        CensusSpec(65, (2,), Sampled(samples=5, seed=0, edge_prob=0.5))


# -- random graphs -------------------------------------------------------------

def test_random_graph_probability_zero_is_edgeless():
    g = random_graph(5, (2, 3), 0.0, seed=1)
    assert len(g) == 5 and g.edges() == ()


def test_random_graph_probability_one_with_single_label():
    assert random_graph(3, (2,), 1.0, seed=123) == complete_graph(3, names=("v1", "v2", "v3"))


def test_random_graph_deterministic():
    a = random_graph(9, (2, 3, 4), 0.5, seed=42)
    b = random_graph(9, (2, 3, 4), 0.5, seed=42)
    assert a == b
    assert a != random_graph(9, (2, 3, 4), 0.5, seed=43)


def test_random_graph_uses_given_labels_only():
    g = random_graph(8, (5, 9), 0.9, seed=2)
    assert g.edge_count > 0
    assert all(m in (5, 9) for _, _, m in g.edges())


def test_derive_seed_is_stable():
    # frozen values guard the cross-platform mixing sequence
    assert derive_seed(0, 0) == 16294208416658607535
    assert derive_seed(0, 1) == 10451216379200822465
    assert derive_seed(12345, 7) == derive_seed(12345, 7)
    assert derive_seed(12345, 7) != derive_seed(12345, 8)


# -- censuses --------------------------------------------------------------------

def test_golden_census_three_vertices():
    oracle_lerf = sum(1 for g in enumerate_graphs(3, (2, 3)) if not is_poisonous(g))
    assert oracle_lerf == 14
    result = run_census(CensusSpec(3, (2, 3), Exhaustive()))
    assert result.total == 27
    assert result.lerf == oracle_lerf
    assert result.erf == 1
    assert result.coherent == 23
    assert result.poison_by_kind == {1: 0, 2: 0, 3: 13, 4: 0, 5: 0}
    assert result.disagreements == 0
    assert result.chain_ok()


def test_census_single_vertex():
    result = run_census(CensusSpec(1, (2,), Exhaustive()))
    assert (result.total, result.lerf, result.erf, result.coherent) == (1, 1, 1, 1)


def test_census_two_vertices():
    result = run_census(CensusSpec(2, (2, 3), Exhaustive()))
    assert (result.total, result.lerf, result.erf, result.coherent) == (3, 3, 1, 3)


def test_sampled_census_runs_clean():
    result = run_census(CensusSpec(6, (2, 3), Sampled(samples=300, seed=5, edge_prob=0.5)))
    assert result.total == 300
    assert result.disagreements == 0
    assert result.chain_ok()


def test_census_json_shape():
    doc = run_census(CensusSpec(2, (2,), Exhaustive())).to_json_dict()
    assert list(doc) == ["total", "lerf", "erf", "coherent", "poison_by_kind", "disagreements", "elapsed_ms"]
    assert list(doc["poison_by_kind"]) == ["1", "2", "3", "4", "5"]
    assert isinstance(doc["elapsed_ms"], int)


def test_merge_is_order_insensitive():
    spec = CensusSpec(5, (2, 3), Sampled(samples=90, seed=9, edge_prob=0.4))
    full = run_census(spec)
    graphs = [random_graph(5, (2, 3), 0.4, derive_seed(9, i)) for i in range(90)]
    chunks = [CensusResult(), CensusResult(), CensusResult()]
    for i, g in enumerate(graphs):
        classify_into(chunks[i % 3], g)
    for order in ([0, 1, 2], [2, 0, 1], [1, 2, 0]):
        merged = chunks[order[0]].merge(chunks[order[1]]).merge(chunks[order[2]])
        assert (merged.total, merged.lerf, merged.erf, merged.coherent,
                merged.poison_by_kind, merged.disagreements) == (
            full.total, full.lerf, full.erf, full.coherent,
            full.poison_by_kind, full.disagreements)
