"""Assemble the full classification of a single graph into one record."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coherence import CoherenceReport, PathViolation, check_path_condition, is_coherent, is_erf
from .construction import (
    ApexStrategy,
    ConstructionTree,
    construction_to_json_dict,
    find_construction,
    verify_construction,
)
from .formats import serialize_artin
from .graph import LabeledGraph
from .poison import PoisonWitness, find_poison, verify_witness


@dataclass(frozen=True)
class ClassificationReport:
    """Every verdict and artifact for one graph.

    ``lerf`` is the poison scan's verdict; ``consistency`` records whether
    the independent construction decider and the implication theorems agree
    with it.  Any False consistency flag is an internal invariant breach,
    not a property of the input.
    """

    graph: str
    lerf: bool
    erf: bool
    coherent: bool
    poison_witness: PoisonWitness | None
    s_certificate: ConstructionTree | None
    coherence: CoherenceReport
    path_violation: PathViolation | None
    deciders_agree: bool
    lerf_implies_coherent_ok: bool
    coherent_path_iff_lerf_ok: bool
    witness_verified: bool
    certificate_verified: bool

    def all_consistent(self) -> bool:
        return (
            self.deciders_agree
            and self.lerf_implies_coherent_ok
            and self.coherent_path_iff_lerf_ok
            and self.witness_verified
            and self.certificate_verified
            and (not self.erf or self.lerf)
        )

    def to_json_dict(self, include_witness: bool = False, include_certificate: bool = False) -> dict:
        witness = self.poison_witness.to_json_dict() if include_witness and self.poison_witness else None
        cert = (
            construction_to_json_dict(self.s_certificate)
            if include_certificate and self.s_certificate is not None
            else None
        )
        return {
            "graph": self.graph,
            "lerf": self.lerf,
            "erf": self.erf,
            "coherent": self.coherent,
            "poison_witness": witness,
            "s_certificate": cert,
            "coherence": self.coherence.to_json_dict(),
            "path_violation": self.path_violation.to_json_dict() if self.path_violation else None,
            "consistency": {
                "deciders_agree": self.deciders_agree,
                "lerf_implies_coherent_ok": self.lerf_implies_coherent_ok,
                "coherent_path_iff_lerf_ok": self.coherent_path_iff_lerf_ok,
            },
        }

    def to_text(self, include_witness: bool = False, include_certificate: bool = False) -> str:
        def yn(b: bool) -> str:
            return "yes" if b else "no"

        vertex_count = sum(1 for line in self.graph.splitlines() if line.startswith("vertex "))
        edge_count = sum(1 for line in self.graph.splitlines() if line.startswith("edge "))
        lines = [
            f"graph: {vertex_count} vertices, {edge_count} edges",
            f"lerf: {yn(self.lerf)}",
            f"erf: {yn(self.erf)}",
            f"coherent: {yn(self.coherent)}",
            f"chordal: {yn(self.coherence.chordal)}",
            "path-condition: " + ("ok" if self.path_violation is None
                                  else f"violated ({self.path_violation.reason.value})"),
            f"deciders-agree: {yn(self.deciders_agree)}",
        ]
        if include_witness and self.poison_witness is not None:
            w = self.poison_witness
            lines.append(f"poison-witness: kind {int(w.kind)} [{', '.join(w.vertices)}]")
        if include_certificate and self.s_certificate is not None:
            cert = json.dumps(construction_to_json_dict(self.s_certificate), separators=(",", ":"))
            lines.append(f"s-certificate: {cert}")
        return "\n".join(lines) + "\n"


def classify(g: LabeledGraph) -> ClassificationReport:
    """Run all deciders on one graph and cross-check them against each other."""
    witness = find_poison(g)
    cert = find_construction(g, ApexStrategy.EXHAUSTIVE_MEMOIZED)
    coh = is_coherent(g)
    violation = check_path_condition(g)
    erf = is_erf(g)
    lerf = witness is None

    return ClassificationReport(
        graph=serialize_artin(g),
        lerf=lerf,
        erf=erf,
        coherent=coh.coherent,
        poison_witness=witness,
        s_certificate=cert,
        coherence=coh,
        path_violation=violation,
        deciders_agree=lerf == (cert is not None),
        lerf_implies_coherent_ok=(not lerf) or coh.coherent,
        coherent_path_iff_lerf_ok=(not coh.coherent) or ((violation is None) == lerf),
        witness_verified=witness is None or verify_witness(g, witness),
        certificate_verified=cert is None or verify_construction(g, cert),
    )
