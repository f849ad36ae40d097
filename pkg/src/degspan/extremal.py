"""Tight example families for the degree-sum threshold.

For k >= 1 and r >= 3, take disjoint vertex groups X and Y of size k and
Z of size 2k(r-2) + 2, and remove every X-Y edge from the complete graph
on all n = 2k(r-1) + 2 vertices.  Ask for degree r at each X and Y vertex
and degree 1 on Z: the internal vertices of such a tree would have to
span the disconnected X-Y part alone, so no tree qualifies, yet every
non-adjacent pair sits only 1/(r-1) below the threshold.
"""

from __future__ import annotations

from .graph import LabelledGraph
from .sequences import DegreeSequence, validate_degree_sequence

__all__ = ["build_extremal", "extremal_worst_sum", "extremal_order"]


def extremal_order(k: int, r: int) -> int:
    """Vertex count 2k(r-1) + 2 of the (k, r) family member."""
    _check_params(k, r)
    return 2 * k * (r - 1) + 2


def _check_params(k: int, r: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")


def build_extremal(k: int, r: int) -> tuple[LabelledGraph, DegreeSequence]:
    """Graph and target sequence of the (k, r) family member.

    Layout: X at indices 0..k-1, Y at k..2k-1, Z at 2k..n-1.  The target
    asks degree r on X and Y and degree 1 on Z, which sums to 2(n-1).
    """
    _check_params(k, r)
    n = extremal_order(k, r)
    xs = range(0, k)
    ys = range(k, 2 * k)
    missing = {(x, y) for x in xs for y in ys}
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in missing
    ]
    degrees = [r] * (2 * k) + [1] * (n - 2 * k)
    return LabelledGraph.from_edges(n, edges), validate_degree_sequence(degrees)


def extremal_worst_sum(k: int, r: int) -> int:
    """Degree sum of any non-adjacent (X, Y) pair: 2k(2r-3) + 2.

    Each such vertex misses itself and the k vertices across, giving
    degree (k-1) + (2k(r-2)+2); the sum lands exactly 1/(r-1) below the
    threshold at order 2k(r-1) + 2.
    """
    _check_params(k, r)
    return 2 * ((k - 1) + (2 * k * (r - 2) + 2))
