"""Command-line interface.

Subcommands: ``check`` classifies one ``.artin`` file, ``census`` sweeps a
family, ``gen`` emits a reproducible random graph, ``selfcheck`` runs the
exhaustive decider cross-validation.

Exit codes, everywhere: 0 success, 1 internal invariant breach (the two
LERF deciders disagreed, which signals a bug, never a property of the
input), 2 input or flag error, 3 failed ``--assert-lerf``.  A non-LERF
verdict by itself is a finding, not a failure, and exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import CensusResult, CensusSpec, Exhaustive, Sampled, TooManyGraphsError, random_graph, run_census
from .formats import SourceError, parse_artin, serialize_artin
from .graph import GraphError
from .report import classify

EXIT_OK = 0
EXIT_INVARIANT_BREACH = 1
EXIT_INPUT_ERROR = 2
EXIT_ASSERTION_FAILED = 3


def _parse_labels(text: str) -> tuple[int, ...]:
    try:
        labels = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"labels must be comma-separated integers, got {text!r}") from None
    if not labels or any(m < 2 for m in labels):
        raise ValueError("labels must be integers >= 2")
    return tuple(sorted(set(labels)))


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def cmd_check(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return _fail(str(exc))
    try:
        g = parse_artin(text)
    except SourceError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except GraphError as exc:
        return _fail(str(exc))

    report = classify(g)
    if args.json:
        doc = report.to_json_dict(include_witness=args.witness, include_certificate=args.certificate)
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(report.to_text(include_witness=args.witness, include_certificate=args.certificate))
    if not report.all_consistent():
        print("error: internal invariant breach: deciders disagree on this input", file=sys.stderr)
        return EXIT_INVARIANT_BREACH
    if args.assert_lerf and not report.lerf:
        return EXIT_ASSERTION_FAILED
    return EXIT_OK


def _census_text(result: CensusResult) -> str:
    kinds = " ".join(f"kind{k}={result.poison_by_kind[k]}" for k in range(1, 6))
    return (
        f"total {result.total}\n"
        f"lerf {result.lerf}\n"
        f"erf {result.erf}\n"
        f"coherent {result.coherent}\n"
        f"poison {kinds}\n"
        f"disagreements {result.disagreements}\n"
        f"elapsed {result.elapsed:.3f}s\n"
    )


def cmd_census(args: argparse.Namespace) -> int:
    try:
        labels = _parse_labels(args.labels)
        if args.exhaustive:
            mode = Exhaustive()
        else:
            mode = Sampled(samples=args.samples, seed=args.seed, edge_prob=args.edge_prob)
        spec = CensusSpec(args.n, labels, mode)
    except (ValueError, TooManyGraphsError) as exc:
        return _fail(str(exc))
    result = run_census(spec)
    if args.json:
        print(json.dumps(result.to_json_dict(), indent=2))
    else:
        sys.stdout.write(_census_text(result))
    if result.disagreements > 0 or not result.chain_ok():
        print("error: internal invariant breach during census", file=sys.stderr)
        return EXIT_INVARIANT_BREACH
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        labels = _parse_labels(args.labels)
        g = random_graph(args.n, labels, args.edge_prob, args.seed)
    except ValueError as exc:
        return _fail(str(exc))
    sys.stdout.write(serialize_artin(g))
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    try:
        labels = _parse_labels(args.labels)
        if args.max_n < 1:
            raise ValueError("--max-n must be at least 1")
        specs = [CensusSpec(n, labels, Exhaustive()) for n in range(1, args.max_n + 1)]
    except (ValueError, TooManyGraphsError) as exc:
        return _fail(str(exc))
    ok = True
    for spec in specs:
        result = run_census(spec)
        good = result.disagreements == 0 and result.chain_ok()
        ok = ok and good
        print(
            f"n={spec.n}: total={result.total} lerf={result.lerf} erf={result.erf} "
            f"coherent={result.coherent} disagreements={result.disagreements}"
            + ("" if good else " FAIL")
        )
    if not ok:
        print("error: selfcheck found decider disagreements", file=sys.stderr)
        return EXIT_INVARIANT_BREACH
    print("selfcheck ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinsep",
        description="Decide LERF, ERF and coherence of an Artin group from its labeled defining graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="classify one .artin file")
    p_check.add_argument("file", help="path to a .artin graph file")
    p_check.add_argument("--json", action="store_true", help="emit the JSON report instead of text")
    p_check.add_argument("--witness", action="store_true", help="include the poison witness, if any")
    p_check.add_argument("--certificate", action="store_true", help="include the construction certificate, if any")
    p_check.add_argument("--assert-lerf", action="store_true", help="exit 3 unless the graph is LERF")

    p_census = sub.add_parser("census", help="classify a whole family of graphs")
    p_census.add_argument("--n", type=int, required=True, help="vertex count")
    p_census.add_argument("--labels", default="2,3", help="comma-separated edge labels (default 2,3)")
    group = p_census.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true", help="enumerate every graph of the family")
    group.add_argument("--samples", type=int, help="number of random graphs to draw")
    p_census.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    p_census.add_argument("--edge-prob", type=float, default=0.5, help="edge probability (default 0.5)")
    p_census.add_argument("--json", action="store_true", help="emit the JSON result")

    p_gen = sub.add_parser("gen", help="emit a reproducible random graph in .artin form")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--labels", default="2,3", help="comma-separated edge labels (default 2,3)")
    p_gen.add_argument("--edge-prob", type=float, default=0.5, help="edge probability (default 0.5)")
    p_gen.add_argument("--seed", type=int, default=0, help="seed (default 0)")

    p_self = sub.add_parser("selfcheck", help="exhaustively cross-validate the deciders")
    p_self.add_argument("--max-n", type=int, default=4, help="run every n up to this bound (default 4)")
    p_self.add_argument("--labels", default="2,3", help="comma-separated edge labels (default 2,3)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "check": cmd_check,
        "census": cmd_census,
        "gen": cmd_gen,
        "selfcheck": cmd_selfcheck,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
