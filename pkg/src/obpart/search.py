"""Exact minimum biclique cover sizes of small complete graphs.

A cover of K_n by m bicliques is a label word per vertex over
{absent, first, second}^m.  Whether two vertices' edge is covered legally
depends only on their two words, so a cover is a set of n pairwise
compatible words: a clique in a compatibility graph on 3^m words.  The
search looks for such a clique with int-bitset candidate sets.

Vertex symmetry is removed by taking the words in increasing order.
Position symmetry is removed by forcing the smallest word to be sorted
(0...0 1...1 2...2): for any cover some position permutation makes its
least word sorted, because the least permuted image of any word is its
sorted rearrangement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .construct import BudgetExceeded
from .core import Biclique, OrderedPartition

PARTITION = "partition"
TWO_COVER = "two_cover"
ORDERED = "ordered"
MODES = (PARTITION, TWO_COVER, ORDERED)

ABSENT, FIRST, SECOND = 0, 1, 2

DEFAULT_BUDGET = 5_000_000


class SearchBudgetExceeded(BudgetExceeded):
    def __init__(self, m: int, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes while testing m={m}")
        self.m = m
        self.nodes = nodes


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def pair_ok(fwd: int, back: int, mode: str) -> bool:
    """Whether an edge covered ``fwd`` times as (u, v) and ``back`` times as (v, u) is legal."""
    if mode == PARTITION:
        return fwd + back == 1
    if mode == TWO_COVER:
        return 1 <= fwd + back <= 2
    return fwd <= 1 and back <= 1 and fwd + back >= 1


def _compatibility(m: int, mode: str) -> tuple[list[tuple[int, ...]], list[int]]:
    words = list(itertools.product((ABSENT, FIRST, SECOND), repeat=m))
    w = np.array(words, dtype=np.int64).reshape(len(words), m)
    first = (w == FIRST).astype(np.int64)
    second = (w == SECOND).astype(np.int64)
    fwd = first @ second.T
    back = fwd.T
    if mode == PARTITION:
        ok = fwd + back == 1
    elif mode == TWO_COVER:
        ok = (fwd + back >= 1) & (fwd + back <= 2)
    else:
        ok = (fwd <= 1) & (back <= 1) & (fwd + back >= 1)
    later = []
    for a in range(len(words)):
        mask = 0
        for b in np.nonzero(ok[a, a + 1 :])[0]:
            mask |= 1 << (a + 1 + int(b))
        later.append(mask)
    return words, later


def labels_to_partition(words: list[tuple[int, ...]]) -> OrderedPartition:
    """Bicliques from label words; positions with an empty side are dropped."""
    out = []
    m = len(words[0]) if words else 0
    for pos in range(m):
        u = tuple(x + 1 for x, wd in enumerate(words) if wd[pos] == FIRST)
        w = tuple(x + 1 for x, wd in enumerate(words) if wd[pos] == SECOND)
        if u and w:
            out.append(Biclique(u, w))
    return OrderedPartition(len(words), tuple(out))


def feasible(
    n_vertices: int, m: int, mode: str, budget: int = DEFAULT_BUDGET
) -> Optional[OrderedPartition]:
    """Least (canonical) cover of K_n with at most m bicliques, or None if there is none.

    Raises SearchBudgetExceeded instead of answering when more than
    ``budget`` search nodes would be needed.
    """
    _check_mode(mode)
    if n_vertices < 2 or m < 1:
        raise ValueError("need n_vertices >= 2 and m >= 1")
    if 2**m < n_vertices:
        # m bipartite graphs cannot cover K_n when 2^m < n (chromatic number)
        return None
    words, later = _compatibility(m, mode)
    roots = [x for x, wd in enumerate(words) if list(wd) == sorted(wd)]
    nodes = 0
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        nonlocal nodes
        if len(chosen) == n_vertices:
            return True
        need = n_vertices - len(chosen)
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(m, nodes)
            chosen.append(v)
            if extend(cand & later[v]):
                return True
            chosen.pop()
        return False

    for r in roots:
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(m, nodes)
        chosen[:] = [r]
        if extend(later[r]):
            return labels_to_partition([words[x] for x in chosen])
    return None


@dataclass
class SearchResult:
    n_vertices: int
    mode: str
    value: Optional[int]
    witness: Optional[OrderedPartition]
    lower: int
    upper: int

    @property
    def known(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "mode": self.mode,
            "value": self.value if self.known else "unknown",
            "lower": self.lower,
            "upper": self.upper,
        }


def check_witness(p: OrderedPartition, mode: str) -> bool:
    from .verify import cover_multiplicity_ok, verify_ordered

    if mode == PARTITION:
        return cover_multiplicity_ok(p, 1, 1)
    if mode == TWO_COVER:
        return cover_multiplicity_ok(p, 1, 2)
    return verify_ordered(p)[0]


def min_cover_size(n_vertices: int, mode: str, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Smallest m admitting a cover; on budget exhaustion, value is None and [lower, upper] brackets it."""
    _check_mode(mode)
    if n_vertices < 2:
        raise ValueError("need n_vertices >= 2")
    upper = n_vertices - 1  # star partition works in every mode
    m = max(1, math.ceil(math.log2(n_vertices)))
    while m <= upper:
        try:
            wit = feasible(n_vertices, m, mode, budget)
        except SearchBudgetExceeded:
            return SearchResult(n_vertices, mode, None, None, m, upper)
        if wit is not None:
            if len(wit) != m or not check_witness(wit, mode):
                raise AssertionError(f"search produced an invalid witness for m={m}")
            return SearchResult(n_vertices, mode, m, wit, m, m)
        m += 1
    raise AssertionError("star partition bound violated")
