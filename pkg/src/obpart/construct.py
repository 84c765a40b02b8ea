"""Explicit ordered biclique partition of K_{n^(2k-1)}.

Each edge family is the blowup of disjoint copies of a small base graph
(K_n for C_i and D_j, the grid complement for E_{i,j}).  Star partitions
of the base graphs are blown up into bicliques.  The only double-covered
edges lie in C_i and E_{i,j}, and the two root orders below make such an
edge point one way in the C star and the other way in the E star.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Hashable, Optional, Sequence

from .core import (
    Biclique,
    EdgeFamilyId,
    OrderedPartition,
    all_coords,
    check_family,
    dimension,
    families,
    family_constraint,
)

DEFAULT_MAX_VERTICES = 4096


class BudgetExceeded(RuntimeError):
    """A configured size or node budget was exceeded."""


@dataclass(frozen=True)
class StarOrdering:
    """Order in which star roots are picked.

    Roots are compared on their coordinates at ``significance`` (most
    significant first); ``direction`` is "ascending" or "descending".
    """

    significance: tuple[int, ...]
    direction: str = "ascending"

    def __post_init__(self):
        if self.direction not in ("ascending", "descending"):
            raise ValueError(f"unknown direction {self.direction!r}")
        if len(set(self.significance)) != len(self.significance):
            raise ValueError("significance positions must be distinct")


def default_ordering(fam: EdgeFamilyId, k: int) -> StarOrdering:
    check_family(fam, k)
    kind, i, j = fam
    if kind == "C":
        return StarOrdering(tuple(range(k + i, i, -1)), "ascending")
    if kind == "D":
        con = family_constraint(fam, k)
        return StarOrdering((j,) + tuple(reversed(con.equal)), "ascending")
    return StarOrdering(tuple(range(k + i, k + j - 1, -1)) + tuple(range(j, 0, -1)), "descending")


def star_partition(
    ordered_vertices: Sequence[Hashable], adjacency: Callable[[Hashable, Hashable], bool]
) -> list[Biclique]:
    """Stars B({v_i}, N(v_i) ∩ {v_{i+1}, ..., v_m}); stars without leaves are dropped."""
    if len(set(ordered_vertices)) != len(ordered_vertices):
        raise ValueError("ordered_vertices must be distinct")
    stars = []
    for pos, root in enumerate(ordered_vertices):
        leaves = [v for v in ordered_vertices[pos + 1 :] if adjacency(root, v)]
        if leaves:
            stars.append(Biclique((root,), tuple(leaves)))
    return stars


def _all_differ(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x != y for x, y in zip(a, b))


def build_family_bicliques(
    fam: EdgeFamilyId, n: int, k: int, ordering: Optional[StarOrdering] = None
) -> list[Biclique]:
    """A biclique partition of the graph whose edges are exactly the family ``fam``."""
    check_family(fam, k)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    con = family_constraint(fam, k)
    if ordering is None:
        ordering = default_ordering(fam, k)
    allowed = set(con.equal) | set(con.differ)
    if not set(con.differ) <= set(ordering.significance) <= allowed:
        raise ValueError(
            f"significance {ordering.significance} must cover {con.differ} "
            f"and stay within {sorted(allowed)}"
        )

    # group vertices by (copy, base vertex); free coordinates are the blowup
    groups: dict[tuple, list[int]] = defaultdict(list)
    for idx, x in enumerate(all_coords(n, k), start=1):
        copy = tuple(x[p - 1] for p in con.equal)
        base = tuple(x[p - 1] for p in con.differ)
        groups[copy, base].append(idx)

    def root_key(copy, base):
        val = dict(zip(con.equal, copy))
        val.update(zip(con.differ, base))
        return tuple(val[p] for p in ordering.significance)

    reverse = ordering.direction == "descending"
    bases = list(itertools.product(range(1, n + 1), repeat=len(con.differ)))
    emitted = []
    for copy in itertools.product(range(1, n + 1), repeat=len(con.equal)):
        order = sorted(bases, key=lambda b: root_key(copy, b), reverse=reverse)
        ids = list(range(len(order)))
        for star in star_partition(ids, lambda a, b: _all_differ(order[a], order[b])):
            root = order[star.first_side[0]]
            u = groups[copy, root]
            w = [v for leaf in star.second_side for v in groups[copy, order[leaf]]]
            emitted.append((root_key(copy, root), Biclique(tuple(u), tuple(w))))
    emitted.sort(key=lambda t: t[0], reverse=reverse)
    return [b for _, b in emitted]


def predicted_size(n: int, k: int) -> int:
    """(2k-1) n^(k-1) (n-1) + sum_{i=1}^{k-1} i n^i (n-1)."""
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return dimension(k) * n ** (k - 1) * (n - 1) + sum(i * n**i * (n - 1) for i in range(1, k))


def check_budget(n: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    total = n ** dimension(k)
    if total > max_vertices:
        raise BudgetExceeded(f"K_N with N = {n}^{dimension(k)} exceeds vertex budget {max_vertices}")
    return total


def build_partition(
    n: int,
    k: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    orderings: Optional[dict[EdgeFamilyId, StarOrdering]] = None,
) -> OrderedPartition:
    total = check_budget(n, k, max_vertices)
    orderings = orderings or {}
    out: list[Biclique] = []
    for fam in families(k):
        out.extend(build_family_bicliques(fam, n, k, orderings.get(fam)))
    return OrderedPartition(total, tuple(out))
