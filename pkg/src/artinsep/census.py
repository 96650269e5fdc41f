"""Enumerate or sample labeled graphs, classify each one, aggregate counts.

The census is the workhorse behind the self-check: every graph in a family
is run through both LERF deciders, the coherence check and the ERF check,
and any clash between them (poison verdict vs construction verdict, a
failed implication, a witness or certificate that does not verify) is
counted as a disagreement.  A correct build reports zero disagreements on
every family.

Counting is over graphs on a fixed, named vertex set ``v1..vn``, not over
isomorphism classes; that keeps the arithmetic exact and the oracle simple.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Union

from .coherence import is_coherent, is_erf
from .construction import ApexStrategy, find_construction, verify_construction
from .graph import MAX_LABEL, MAX_VERTICES, MIN_LABEL, LabeledGraph
from .poison import find_poison, verify_witness

EXHAUSTIVE_LIMIT = 10**8
EXHAUSTIVE_MAX_N = 9


class TooManyGraphsError(ValueError):
    """The requested exhaustive family exceeds the enumeration bound."""


_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    # splitmix64 finalizer: platform-stable 64-bit mixing.
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; identical output on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        return _mix64(self.state)

    def next_unit(self) -> float:
        """Uniform in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_index(self, n: int) -> int:
        return (self.next_u64() * n) >> 64


def derive_seed(seed: int, index: int) -> int:
    """Order-insensitive per-item seed, so work can be partitioned by index."""
    return _mix64((seed ^ ((index + 1) * _GOLDEN)) & _MASK64)


def vertex_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def _validate_labels(labels) -> tuple[int, ...]:
    out = tuple(sorted(set(labels)))
    if not out:
        raise ValueError("label set must be nonempty")
    for m in out:
        if isinstance(m, bool) or not isinstance(m, int) or not MIN_LABEL <= m <= MAX_LABEL:
            raise ValueError(f"labels must be integers in [{MIN_LABEL}, {MAX_LABEL}], got {m!r}")
    return out


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Sampled:
    samples: int
    seed: int
    edge_prob: float


@dataclass(frozen=True)
class CensusSpec:
    """A graph family: vertex count, allowed labels, and enumeration mode."""

    n: int
    labels: tuple[int, ...]
    mode: Union[Exhaustive, Sampled]

    def __post_init__(self):
        object.__setattr__(self, "labels", _validate_labels(self.labels))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        if isinstance(self.mode, Exhaustive):
            if self.n > EXHAUSTIVE_MAX_N:
                raise TooManyGraphsError(
                    f"exhaustive mode supports at most {EXHAUSTIVE_MAX_N} vertices, got {self.n}")
            if self.count() > EXHAUSTIVE_LIMIT:
                raise TooManyGraphsError(
                    f"family of {self.count()} graphs exceeds the bound of {EXHAUSTIVE_LIMIT}")
        elif isinstance(self.mode, Sampled):
            if self.n > MAX_VERTICES:
                raise ValueError(f"sampled mode supports at most {MAX_VERTICES} vertices")
            if self.mode.samples < 1:
                raise ValueError("sample count must be positive")
            if not 0.0 <= self.mode.edge_prob <= 1.0:
                raise ValueError(f"edge probability must be in [0, 1], got {self.mode.edge_prob}")
        else:
            raise ValueError(f"unknown census mode: {self.mode!r}")

    def count(self) -> int:
        pairs = self.n * (self.n - 1) // 2
        return (len(self.labels) + 1) ** pairs


def enumerate_graphs(n: int, labels) -> Iterator[LabeledGraph]:
    """Every graph on ``v1..vn`` where each pair is absent or takes a label.

    Graphs stream in mixed-radix counter order over the vertex pairs in
    lexicographic order, the last pair varying fastest; the total is
    ``(len(labels)+1) ** (n*(n-1)/2)``.
    """
    spec = CensusSpec(n, labels, Exhaustive())
    names = tuple(vertex_names(n))
    pairs = list(combinations(names, 2))
    radix = len(spec.labels) + 1
    total = spec.count()
    sorted_labels = spec.labels
    for code in range(total):
        pl: dict[tuple[str, str], int] = {}
        rem = code
        for pair in reversed(pairs):
            rem, digit = divmod(rem, radix)
            if digit:
                pl[pair] = sorted_labels[digit - 1]
        yield LabeledGraph._unchecked(names, pl)


def random_graph(n: int, labels, edge_prob: float, seed: int) -> LabeledGraph:
    """A seed-stable random graph: each pair gets an edge with probability
    ``edge_prob``, labels drawn uniformly from the label set."""
    if not isinstance(n, int) or n < 0 or n > MAX_VERTICES:
        raise ValueError(f"vertex count must be in [0, {MAX_VERTICES}], got {n!r}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {edge_prob}")
    sorted_labels = _validate_labels(labels)
    names = tuple(vertex_names(n))
    rng = SplitMix64(seed)
    pl: dict[tuple[str, str], int] = {}
    for pair in combinations(names, 2):
        if rng.next_unit() < edge_prob:
            pl[pair] = sorted_labels[rng.next_index(len(sorted_labels))]
    return LabeledGraph._unchecked(names, pl)


@dataclass
class CensusResult:
    """Aggregate verdicts over a family; merging partial results is exact."""

    total: int = 0
    lerf: int = 0
    erf: int = 0
    coherent: int = 0
    poison_by_kind: dict[int, int] = field(default_factory=lambda: {k: 0 for k in range(1, 6)})
    disagreements: int = 0
    elapsed: float = 0.0

    def merge(self, other: "CensusResult") -> "CensusResult":
        merged = CensusResult(
            total=self.total + other.total,
            lerf=self.lerf + other.lerf,
            erf=self.erf + other.erf,
            coherent=self.coherent + other.coherent,
            poison_by_kind={k: self.poison_by_kind[k] + other.poison_by_kind[k] for k in range(1, 6)},
            disagreements=self.disagreements + other.disagreements,
            elapsed=self.elapsed + other.elapsed,
        )
        return merged

    def chain_ok(self) -> bool:
        """erf <= lerf <= coherent <= total, and kinds account for non-LERF."""
        return (
            self.erf <= self.lerf <= self.coherent <= self.total
            and self.lerf + sum(self.poison_by_kind.values()) == self.total
        )

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "lerf": self.lerf,
            "erf": self.erf,
            "coherent": self.coherent,
            "poison_by_kind": {str(k): self.poison_by_kind[k] for k in range(1, 6)},
            "disagreements": self.disagreements,
            "elapsed_ms": int(round(self.elapsed * 1000)),
        }


def classify_into(result: CensusResult, g: LabeledGraph) -> None:
    """Classify one graph and fold its verdicts into ``result``.

    Pure per graph apart from the counter updates, so any partition of a
    family over workers merges to the same totals.
    """
    witness = find_poison(g)
    cert = find_construction(g, ApexStrategy.EXHAUSTIVE_MEMOIZED)
    coh = is_coherent(g)
    erf = is_erf(g)
    lerf = witness is None

    clash = lerf != (cert is not None)
    if witness is not None and not verify_witness(g, witness):
        clash = True
    if cert is not None and not verify_construction(g, cert):
        clash = True
    if erf and not lerf:
        clash = True
    if lerf and not coh.coherent:
        clash = True

    result.total += 1
    if lerf:
        result.lerf += 1
    else:
        result.poison_by_kind[int(witness.kind)] += 1
    if erf:
        result.erf += 1
    if coh.coherent:
        result.coherent += 1
    if clash:
        result.disagreements += 1


def _spec_graphs(spec: CensusSpec) -> Iterator[LabeledGraph]:
    if isinstance(spec.mode, Exhaustive):
        yield from enumerate_graphs(spec.n, spec.labels)
    else:
        for i in range(spec.mode.samples):
            yield random_graph(spec.n, spec.labels, spec.mode.edge_prob, derive_seed(spec.mode.seed, i))


def run_census(spec: CensusSpec) -> CensusResult:
    """Classify every graph of the family and return aggregate counts."""
    start = time.perf_counter()
    result = CensusResult()
    for g in _spec_graphs(spec):
        classify_into(result, g)
    result.elapsed = time.perf_counter() - start
    return result
