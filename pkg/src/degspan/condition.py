"""Exact degree-sum thresholds and whole-graph condition checks.

For a degree cap r >= 2 and order n >= r + 1 the bound is the rational
((2r-3)n - (2r-5)) / (r-1); with r = 3 this is (3n-1)/2.  A graph meets
the condition when every pair of non-adjacent vertices has degree sum at
least the bound.  All comparisons are exact: the margins that matter are
as small as 1/(r-1), which float arithmetic would blur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .graph import LabelledGraph, min_nonadjacent_degree_sum

__all__ = ["ConditionReport", "degree_sum_threshold", "check_condition"]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking one graph against the degree-sum bound."""

    n: int
    r: int
    threshold: Fraction
    satisfied: bool
    worst_pair: tuple[int, int, int] | None  # (u, v, deg sum), None iff complete

    def to_json_dict(self) -> dict[str, Any]:
        worst = None
        if self.worst_pair is not None:
            u, v, s = self.worst_pair
            worst = {"u": u, "v": v, "sum": s}
        return {
            "n": self.n,
            "r": self.r,
            "threshold": str(self.threshold),
            "satisfied": self.satisfied,
            "worst_pair": worst,
        }


def degree_sum_threshold(n: int, r: int) -> Fraction:
    """Exact bound ((2r-3)n - (2r-5)) / (r-1).

    r = 2 gives n + 1, which no non-complete graph can reach (degree sums
    cap at 2(n-2)); the formula is still evaluated honestly.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n < r + 1:
        raise ValueError(f"need n >= r + 1 = {r + 1}, got {n}")
    return Fraction((2 * r - 3) * n - (2 * r - 5), r - 1)


def check_condition(g: LabelledGraph, r: int) -> ConditionReport:
    """Evaluate the degree-sum condition on every non-adjacent pair.

    Complete graphs satisfy it vacuously.  ``worst_pair`` is the
    lexicographically first minimizing pair otherwise.
    """
    bound = degree_sum_threshold(g.n, r)
    worst = min_nonadjacent_degree_sum(g)
    if worst is None:
        return ConditionReport(n=g.n, r=r, threshold=bound, satisfied=True, worst_pair=None)
    (u, v), s = worst
    return ConditionReport(
        n=g.n, r=r, threshold=bound, satisfied=s >= bound, worst_pair=(u, v, s)
    )
