"""Decide subgroup separability (LERF), ERF, and coherence of Artin groups
from their finite labeled defining graphs, with machine-checkable witnesses
and certificates and two independent deciders cross-validating each other.
"""

from .census import (
    CensusResult,
    CensusSpec,
    Exhaustive,
    Sampled,
    TooManyGraphsError,
    enumerate_graphs,
    random_graph,
    run_census,
)
from .coherence import (
    CoherenceReport,
    PathViolation,
    PathViolationReason,
    check_path_condition,
    find_bad_clique,
    is_chordal,
    is_coherent,
    is_erf,
)
from .construction import (
    ApexStrategy,
    Cone,
    ConstructionTree,
    DisjointUnion,
    Leaf,
    MalformedConstructionError,
    StrategyDisagreement,
    construction_from_json_dict,
    construction_to_json_dict,
    cross_check_strategies,
    find_construction,
    replay_construction,
    verify_construction,
)
from .formats import (
    ErrorKind,
    SourceError,
    graph_from_json,
    graph_to_json,
    parse_artin,
    serialize_artin,
)
from .graph import (
    MAX_LABEL,
    MAX_VERTICES,
    MIN_LABEL,
    DuplicateEdgeError,
    DuplicateVertexError,
    GraphError,
    GraphTooLargeError,
    InvalidVertexNameError,
    LabeledGraph,
    LabelTooLargeError,
    LabelTooSmallError,
    NameCollisionError,
    SelfLoopError,
    UnknownVertexError,
    cone2,
    disjoint_union,
    erf_extension,
)
from .poison import (
    PoisonKind,
    PoisonWitness,
    find_bad_triple,
    find_open_path3_all_two,
    find_poison,
    find_square_all_two,
    find_square_one_chord,
    find_square_two_chords,
    verify_witness,
    witness_from_json_dict,
)
from .report import ClassificationReport, classify

__version__ = "0.1.0"

__all__ = [
    "ApexStrategy",
    "CensusResult",
    "CensusSpec",
    "ClassificationReport",
    "CoherenceReport",
    "Cone",
    "ConstructionTree",
    "DisjointUnion",
    "DuplicateEdgeError",
    "DuplicateVertexError",
    "ErrorKind",
    "Exhaustive",
    "GraphError",
    "GraphTooLargeError",
    "InvalidVertexNameError",
    "LabelTooLargeError",
    "LabelTooSmallError",
    "LabeledGraph",
    "Leaf",
    "MalformedConstructionError",
    "MAX_LABEL",
    "MAX_VERTICES",
    "MIN_LABEL",
    "NameCollisionError",
    "PathViolation",
    "PathViolationReason",
    "PoisonKind",
    "PoisonWitness",
    "Sampled",
    "SelfLoopError",
    "SourceError",
    "StrategyDisagreement",
    "TooManyGraphsError",
    "UnknownVertexError",
    "check_path_condition",
    "classify",
    "cone2",
    "construction_from_json_dict",
    "construction_to_json_dict",
    "cross_check_strategies",
    "disjoint_union",
    "enumerate_graphs",
    "erf_extension",
    "find_bad_clique",
    "find_bad_triple",
    "find_construction",
    "find_open_path3_all_two",
    "find_poison",
    "find_square_all_two",
    "find_square_one_chord",
    "find_square_two_chords",
    "graph_from_json",
    "graph_to_json",
    "is_chordal",
    "is_coherent",
    "is_erf",
    "parse_artin",
    "random_graph",
    "replay_construction",
    "run_census",
    "serialize_artin",
    "verify_construction",
    "verify_witness",
    "witness_from_json_dict",
]
