"""Command-line front end: solve, check, realize, oracle, extremal, batch."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .condition import check_condition
from .extremal import build_extremal, extremal_worst_sum
from .graph import (
    LabelledGraph,
    min_nonadjacent_degree_sum,
    parse_graph,
    random_condition_graph,
    serialize_edge_list,
    serialize_graph,
)
from .oracle import DEFAULT_BUDGET, OracleBudgetError, count_trees, oracle_count, oracle_find
from .sequences import DegreeSequence, parse_sequence_literal, random_degree_sequence, realize_tree
from .solver import find_spanning_tree, verify_tree
from .tree import LabelledTree

__all__ = ["main", "entrypoint", "run_batch", "BatchSummary"]


def _load_graph(path: str) -> LabelledGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _load_sequence(source: str) -> DegreeSequence:
    if source.startswith("@"):
        source = Path(source[1:]).read_text(encoding="utf-8")
    return parse_sequence_literal(source)


def _emit_json(obj: dict[str, Any]) -> None:
    print(json.dumps(obj, indent=2))


def _tree_json(t: LabelledTree) -> dict[str, Any]:
    return {"n": t.n, "edges": [list(e) for e in t.edges]}


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    seq = _load_sequence(args.seq)
    result = find_spanning_tree(g, seq)
    if result.ok:
        assert result.tree is not None
        if not verify_tree(g, result.tree, seq):
            raise RuntimeError("internal error: solver emitted an invalid tree")
        if args.format == "json":
            _emit_json(
                {
                    "status": "found",
                    **_tree_json(result.tree),
                    "exchanges": [s.to_json_dict() for s in result.steps],
                }
            )
        else:
            print(serialize_edge_list(result.tree.n, result.tree.edges), end="")
        return 0
    w = result.witness
    assert w is not None
    if args.format == "json":
        _emit_json({"status": "stalled", "witness": w.to_json_dict()})
    else:
        final = w.chain[-1]
        print(f"stalled: no exchange at missing pair ({w.u}, {w.v})")
        print(f"component sizes: {w.size_u} + {w.size_v} = {w.size_u + w.size_v}")
        print(
            f"counts: hooks_u={w.hooks_u} bridges_u={w.bridges_u}"
            f" hooks_v={w.hooks_v} bridges_v={w.bridges_v}"
        )
        print(
            f"        u_nbrs_same={w.u_nbrs_same} u_nbrs_other={w.u_nbrs_other}"
            f" v_nbrs_same={w.v_nbrs_same} v_nbrs_other={w.v_nbrs_other}"
        )
        print(f"deg(u)+deg(v) = {w.degree_sum}; {final.label}: {final.lhs} <= {final.rhs}")
    return 1


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = check_condition(g, args.r)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(f"n={report.n} r={report.r} threshold={report.threshold}")
        if report.worst_pair is None:
            print("worst pair: none (complete graph)")
        else:
            u, v, s = report.worst_pair
            print(f"worst pair: ({u}, {v}) sum {s}")
        print(f"condition: {'satisfied' if report.satisfied else 'NOT satisfied'}")
    return 0 if report.satisfied else 1


def _cmd_realize(args: argparse.Namespace) -> int:
    seq = _load_sequence(args.seq)
    t = realize_tree(seq)
    if args.format == "json":
        _emit_json(_tree_json(t))
    else:
        print(serialize_edge_list(t.n, t.edges), end="")
    return 0


def _cmd_oracle_find(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    seq = _load_sequence(args.seq)
    total = count_trees(seq)
    tree = oracle_find(g, seq, budget=args.budget)
    if args.format == "json":
        _emit_json(
            {
                "total_candidates": total,
                "first_tree": _tree_json(tree) if tree is not None else None,
            }
        )
    elif tree is not None:
        print(serialize_edge_list(tree.n, tree.edges), end="")
    else:
        print(f"none of the {total} candidate trees is contained in the graph")
    return 0 if tree is not None else 1


def _cmd_oracle_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    seq = _load_sequence(args.seq)
    total = count_trees(seq)
    contained = oracle_count(g, seq, budget=args.budget)
    if args.format == "json":
        _emit_json({"total_candidates": total, "contained_count": contained})
    else:
        print(f"{contained} of {total} candidate trees contained in the graph")
    return 0 if contained > 0 else 1


def _cmd_extremal(args: argparse.Namespace) -> int:
    g, seq = build_extremal(args.k, args.r)
    seq_literal = ",".join(str(d) for d in seq.degrees)
    verification: dict[str, Any] | None = None
    ok = True
    if args.verify:
        report = check_condition(g, args.r)
        worst = min_nonadjacent_degree_sum(g)
        assert worst is not None
        worst_sum = worst[1]
        formula = extremal_worst_sum(args.k, args.r)
        gap = report.threshold - worst_sum
        oracle_result: int | None = None
        if count_trees(seq) <= args.budget:
            oracle_result = oracle_count(g, seq, budget=args.budget)
        ok = (
            not report.satisfied
            and worst_sum == formula
            and gap == Fraction(1, args.r - 1)
            and oracle_result in (0, None)
        )
        verification = {
            "condition_satisfied": report.satisfied,
            "worst_sum": worst_sum,
            "worst_sum_formula": formula,
            "threshold": str(report.threshold),
            "gap": str(gap),
            "oracle_count": oracle_result,
            "ok": ok,
        }
    if args.format == "json":
        payload: dict[str, Any] = {
            "k": args.k,
            "r": args.r,
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "sequence": list(seq.degrees),
        }
        if verification is not None:
            payload["verification"] = verification
        _emit_json(payload)
    else:
        print(serialize_graph(g), end="")
        print(f"# sequence: {seq_literal}")
        if verification is not None:
            for key, value in verification.items():
                print(f"# {key}: {value}")
    return 0 if ok else 1


@dataclass(frozen=True)
class BatchSummary:
    """Aggregate outcome of one randomized ensemble run."""

    instances: int
    solved: int
    verified: int
    max_exchanges: int
    failures: tuple[str, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "instances": self.instances,
            "solved": self.solved,
            "verified": self.verified,
            "max_exchanges": self.max_exchanges,
            "failures": list(self.failures),
        }


def run_batch(
    n_min: int,
    n_max: int,
    r: int,
    count: int,
    base_seed: int = 0,
    verbose: bool = False,
) -> BatchSummary:
    """Solve and verify ``count`` random threshold-satisfying instances.

    Every instance draws a graph from random_condition_graph and a random
    valid sequence capped at r, so each solve is in the guaranteed regime
    and any stall or failed verification is recorded as a failure.
    """
    if n_min > n_max:
        raise ValueError(f"empty order range [{n_min}, {n_max}]")
    solved = 0
    verified = 0
    max_exchanges = 0
    failures: list[str] = []
    for i in range(count):
        rng = random.Random(base_seed * 1_000_003 + i)
        n = rng.randint(n_min, n_max)
        g = random_condition_graph(n, r, seed=rng.randrange(2**32))
        seq = random_degree_sequence(n, r, rng)
        result = find_spanning_tree(g, seq)
        max_exchanges = max(max_exchanges, len(result.steps))
        if not result.ok:
            failures.append(f"instance {i} (n={n}, r={r}): stalled")
            continue
        solved += 1
        assert result.tree is not None
        outcome = verify_tree(g, result.tree, seq)
        if outcome:
            verified += 1
        else:
            failures.append(f"instance {i} (n={n}, r={r}): {outcome.reason}")
        if verbose:
            print(
                f"instance {i}: n={n} exchanges={len(result.steps)} ok={bool(outcome)}",
                file=sys.stderr,
            )
    return BatchSummary(
        instances=count,
        solved=solved,
        verified=verified,
        max_exchanges=max_exchanges,
        failures=tuple(failures),
    )


def _cmd_batch(args: argparse.Namespace) -> int:
    summary = run_batch(
        args.n_min, args.n_max, args.r, args.count, base_seed=args.seed, verbose=args.verbose
    )
    if args.format == "json":
        _emit_json(summary.to_json_dict())
    else:
        print(
            f"instances: {summary.instances} solved: {summary.solved}"
            f" verified: {summary.verified} max_exchanges: {summary.max_exchanges}"
            f" failures: {len(summary.failures)}"
        )
        for line in summary.failures:
            print(f"  {line}")
    return 0 if not summary.failures else 1


def _add_format(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degspan",
        description="Spanning trees with an exact prescribed degree sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="find a spanning tree with the given degree sequence")
    solve.add_argument("--graph", required=True, help="graph file path")
    solve.add_argument("--seq", required=True, help="degree literal '3,1,1,1' or @FILE")
    _add_format(solve)
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="evaluate the degree-sum condition")
    check.add_argument("--graph", required=True, help="graph file path")
    check.add_argument("--r", type=int, required=True, help="degree cap parameter (>= 2)")
    _add_format(check)
    check.set_defaults(func=_cmd_check)

    realize = sub.add_parser("realize", help="canonical tree for a degree sequence")
    realize.add_argument("--seq", required=True, help="degree literal or @FILE")
    _add_format(realize)
    realize.set_defaults(func=_cmd_realize)

    ofind = sub.add_parser("oracle-find", help="exhaustive search for a contained tree")
    ofind.add_argument("--graph", required=True)
    ofind.add_argument("--seq", required=True)
    ofind.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_format(ofind)
    ofind.set_defaults(func=_cmd_oracle_find)

    ocount = sub.add_parser("oracle-count", help="exhaustive count of contained trees")
    ocount.add_argument("--graph", required=True)
    ocount.add_argument("--seq", required=True)
    ocount.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_format(ocount)
    ocount.set_defaults(func=_cmd_oracle_count)

    extremal = sub.add_parser("extremal", help="emit a tight example family member")
    extremal.add_argument("--k", type=int, required=True, help="group size (>= 1)")
    extremal.add_argument("--r", type=int, default=3, help="degree cap (>= 3, default 3)")
    extremal.add_argument("--verify", action="store_true", help="run the tightness checks")
    extremal.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_format(extremal)
    extremal.set_defaults(func=_cmd_extremal)

    batch = sub.add_parser("batch", help="randomized solve/verify ensemble")
    batch.add_argument("--n-min", type=int, required=True)
    batch.add_argument("--n-max", type=int, required=True)
    batch.add_argument("--r", type=int, default=3)
    batch.add_argument("--count", type=int, required=True, help="number of instances")
    batch.add_argument("--seed", type=int, default=0)
    batch.add_argument("--verbose", action="store_true")
    _add_format(batch)
    batch.set_defaults(func=_cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand; 0 found/ok, 1 negative verdict, 2 bad input."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
