"""Shared builders, enumerators, and hypothesis strategies for the tests."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from hypothesis import strategies as st

from degspan import DegreeSequence, LabelledGraph, validate_degree_sequence


def complete_graph(n: int) -> LabelledGraph:
    return LabelledGraph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> LabelledGraph:
    return LabelledGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> LabelledGraph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return LabelledGraph.from_edges(n, edges)


def all_degree_sequences(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Every positive sequence of length n with entries <= cap summing to 2(n-1)."""
    cap = min(cap, n - 1)
    target = 2 * (n - 1)

    def rec(prefix: list[int], remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        lo = max(1, remaining - cap * (slots - 1))
        hi = min(cap, remaining - (slots - 1))
        for d in range(lo, hi + 1):
            prefix.append(d)
            yield from rec(prefix, remaining - d, slots - 1)
            prefix.pop()

    yield from rec([], target, n)


def all_labelled_graphs(n: int) -> Iterator[LabelledGraph]:
    """All 2^C(n,2) labelled graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield LabelledGraph.from_edges(
            n, (p for i, p in enumerate(pairs) if bits >> i & 1)
        )


def matchings(n: int) -> list[frozenset[tuple[int, int]]]:
    """All matchings of the complete graph on n vertices (including empty)."""
    pairs = list(itertools.combinations(range(n), 2))
    out: list[frozenset[tuple[int, int]]] = [frozenset()]

    def rec(start: int, used: frozenset[int], current: frozenset[tuple[int, int]]) -> None:
        for j in range(start, len(pairs)):
            a, b = pairs[j]
            if a in used or b in used:
                continue
            nxt = current | {pairs[j]}
            out.append(nxt)
            rec(j + 1, used | {a, b}, nxt)

    rec(0, frozenset(), frozenset())
    return out


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 9) -> LabelledGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabelledGraph.from_edges(n, (p for p, keep in zip(pairs, mask) if keep))


@st.composite
def prufer_words(draw, min_n: int = 2, max_n: int = 12) -> tuple[int, tuple[int, ...]]:
    n = draw(st.integers(min_n, max_n))
    word = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return n, tuple(word)


def _draw_capped_degrees(draw, n: int, cap: int | None) -> DegreeSequence:
    limit = n - 1 if cap is None else min(cap, n - 1)
    degrees = [1] * n
    for _ in range(n - 2):
        open_idx = [i for i in range(n) if degrees[i] < limit]
        degrees[draw(st.sampled_from(open_idx))] += 1
    return validate_degree_sequence(degrees)


@st.composite
def degree_sequences(draw, min_n: int = 2, max_n: int = 10, cap: int | None = None) -> DegreeSequence:
    n = draw(st.integers(min_n, max_n))
    return _draw_capped_degrees(draw, n, cap)


@st.composite
def graph_with_sequence(
    draw, min_n: int = 2, max_n: int = 8, cap: int | None = 3
) -> tuple[LabelledGraph, DegreeSequence]:
    """A graph and a valid capped degree sequence on the same vertex set."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = LabelledGraph.from_edges(n, (p for p, keep in zip(pairs, mask) if keep))
    return g, _draw_capped_degrees(draw, n, cap)
