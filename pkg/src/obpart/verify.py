"""Brute-force certificates for ordered partitions and for the edge-family laws."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .construct import DEFAULT_MAX_VERTICES, check_budget
from .core import (
    EdgeFamilyId,
    OrderedPartition,
    WrapFn,
    all_coords,
    families,
    family_constraint,
    wrap_position,
)

UNCOVERED = "uncovered"
OVER_COVERED = "over-covered"
SAME_ORIENTATION = "same-orientation-double"


@dataclass
class CoverageReport:
    n_vertices: int
    once_count: int = 0
    twice_count: int = 0
    violations: list[tuple[tuple[int, int], str]] = field(default_factory=list)
    doubly_covered: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        s = f"{self.once_count} once, {self.twice_count} twice, {len(self.violations)} violations"
        return s

    def to_json(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "once": self.once_count,
            "twice": self.twice_count,
            "doubly_covered": [list(e) for e in self.doubly_covered],
            "violations": [{"edge": list(e), "reason": r} for e, r in self.violations],
        }


def orientation_counts(p: OrderedPartition) -> np.ndarray:
    """T[a, b] = number of bicliques with a on the first side and b on the second (0-based)."""
    n = p.universe_size
    table = np.zeros((n, n), dtype=np.int64)
    for b in p.bicliques:
        u = np.asarray(b.first_side) - 1
        w = np.asarray(b.second_side) - 1
        table[np.ix_(u, w)] += 1
    return table


def coverage_report(p: OrderedPartition) -> CoverageReport:
    table = orientation_counts(p)
    rep = CoverageReport(p.universe_size)
    n = p.universe_size
    for a in range(n):
        for b in range(a + 1, n):
            fwd, back = int(table[a, b]), int(table[b, a])
            edge = (a + 1, b + 1)
            total = fwd + back
            if total == 0:
                rep.violations.append((edge, UNCOVERED))
            elif total > 2:
                rep.violations.append((edge, OVER_COVERED))
            elif total == 1:
                rep.once_count += 1
            elif fwd == 1:
                rep.twice_count += 1
                rep.doubly_covered.append(edge)
            else:
                rep.violations.append((edge, SAME_ORIENTATION))
    return rep


def verify_ordered(p: OrderedPartition) -> tuple[bool, CoverageReport]:
    rep = coverage_report(p)
    return rep.ok, rep


def cover_multiplicity_ok(p: OrderedPartition, low: int, high: int) -> bool:
    """Every edge covered between ``low`` and ``high`` times, ignoring orientation."""
    table = orientation_counts(p)
    sym = table + table.T
    off = ~np.eye(p.universe_size, dtype=bool)
    return bool(np.all((sym[off] >= low) & (sym[off] <= high)))


# ---------------------------------------------------------------------------
# family laws


@dataclass
class LawReport:
    n: int
    k: int
    pairs_checked: int = 0
    counterexamples: list[tuple[str, tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    intersection_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "pairs_checked": self.pairs_checked,
            "intersections": self.intersection_sizes,
            "counterexamples": [
                {"law": law, "u": list(u), "v": list(v)} for law, u, v in self.counterexamples
            ],
        }


def _eq1_mask(eq: np.ndarray, i: int, j: int, k: int) -> np.ndarray:
    # u_j != v_j, u_{k+i} != v_{k+i}, equal on 1..j-1 and i+1..k+i-1
    mask = ~eq[j - 1] & ~eq[k + i - 1]
    for p in list(range(1, j)) + list(range(i + 1, k + i)):
        mask &= eq[p - 1]
    return mask


def verify_family_laws(
    n: int,
    k: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    wrap: WrapFn = wrap_position,
    max_counterexamples: int = 50,
) -> LawReport:
    """Exhaustively check completeness, disjointness, the C∩E identity and the two union facts.

    Every unordered pair of vertices is examined; per-coordinate equality is
    tabulated once as boolean N×N arrays so each law is a mask comparison.
    """
    total = check_budget(n, k, max_vertices)
    verts = np.array(all_coords(n, k), dtype=np.int64)
    eq = np.stack([verts[:, t][:, None] == verts[:, t][None, :] for t in range(verts.shape[1])])
    upper = np.triu(np.ones((total, total), dtype=bool), 1)
    rep = LawReport(n, k, pairs_checked=total * (total - 1) // 2)

    def fail(law: str, mask: np.ndarray) -> None:
        for a, b in np.argwhere(mask & upper):
            if len(rep.counterexamples) >= max_counterexamples:
                return
            rep.counterexamples.append((law, tuple(map(int, verts[a])), tuple(map(int, verts[b]))))

    member = {}
    for f in families(k):
        con = family_constraint(f, k, wrap)
        mask = np.ones((total, total), dtype=bool)
        for p in con.equal:
            mask &= eq[p - 1]
        for p in con.differ:
            mask &= ~eq[p - 1]
        member[f] = mask

    count = sum(m.astype(np.int64) for m in member.values())
    fail("complete", count == 0)

    fams = list(member)
    for x, f1 in enumerate(fams):
        for f2 in fams[x + 1 :]:
            both = member[f1] & member[f2]
            if f1.kind == "C" and f2.kind == "E" and f1.i == f2.i:
                expected = _eq1_mask(eq, f2.i, f2.j, k)
                fail(f"intersection:{f1}&{f2}", both != expected)
                rep.intersection_sizes[f"{f1}&{f2}"] = int((both & upper).sum())
            else:
                fail(f"disjoint:{f1}&{f2}", both)

    union_c = np.zeros((total, total), dtype=bool)
    for f in fams:
        if f.kind == "C":
            union_c |= member[f]
    prefix = np.ones((total, total), dtype=bool)
    for p in range(1, k):
        prefix &= eq[p - 1]
    fail("union-C", prefix & ~union_c)

    for j in range(1, k):
        lhs = member[EdgeFamilyId("D", 0, j)].copy()
        for i in range(j, k):
            lhs |= member[EdgeFamilyId("E", i, j)]
        rhs = ~eq[j - 1]
        for p in range(1, j):
            rhs &= eq[p - 1]
        fail(f"union-D_{j}", lhs != rhs)
    return rep
