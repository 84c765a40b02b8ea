"""0/1 matrices from ordered partitions: exact rank and fooling-set checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .core import OrderedPartition
from .verify import orientation_counts, verify_ordered


@dataclass(frozen=True)
class BooleanMatrix:
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("matrix entries must be 0 or 1")
        object.__setattr__(self, "entries", a.astype(np.uint8))

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, cell: tuple[int, int]) -> int:
        # 1-based cells
        r, c = cell
        return int(self.entries[r - 1, c - 1])

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines += ["".join("1" if x else "0" for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BooleanMatrix":
        return cls(np.array([list(r) for r in rows], dtype=np.int64))


class MatrixFormatError(ValueError):
    def __init__(self, offset: int, message: str):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


def parse_matrix_text(data: bytes) -> BooleanMatrix:
    """Parse the digit-grid format: a line "N", then N lines of N characters 0/1."""
    pos = data.find(b"\n")
    if pos < 0:
        raise MatrixFormatError(len(data), "missing newline after order line")
    head = data[:pos]
    if not head.isdigit():
        bad = next((i for i, ch in enumerate(head) if not chr(ch).isdigit()), 0)
        raise MatrixFormatError(bad, "order line must be a decimal integer")
    n = int(head)
    rows = []
    offset = pos + 1
    for r in range(n):
        for c in range(n):
            at = offset + c
            if at >= len(data):
                raise MatrixFormatError(at, f"unexpected end of data in row {r + 1}")
            if data[at] not in b"01":
                raise MatrixFormatError(at, f"expected 0 or 1 in row {r + 1}, column {c + 1}")
        end = offset + n
        if end >= len(data) or data[end] != ord("\n"):
            raise MatrixFormatError(end, f"row {r + 1} must have exactly {n} digits then a newline")
        rows.append([ch - 48 for ch in data[offset:end]])
        offset = end + 1
    if offset != len(data):
        raise MatrixFormatError(offset, "trailing data after last row")
    return BooleanMatrix(np.array(rows, dtype=np.uint8).reshape(n, n))


def partition_to_matrix(p: OrderedPartition, check: bool = True) -> BooleanMatrix:
    """M[a, b] = number of bicliques with a on the first side and b on the second."""
    if check:
        ok, rep = verify_ordered(p)
        if not ok:
            edge, reason = rep.violations[0]
            raise ValueError(f"not an ordered biclique partition: edge {edge} is {reason}")
    table = orientation_counts(p)
    if table.max(initial=0) > 1:
        raise ValueError("an ordered pair is covered twice; entries would exceed 1")
    return BooleanMatrix(table)


# ---------------------------------------------------------------------------
# rank


def rank_rational(m: BooleanMatrix) -> int:
    """Exact rank over Q by Bareiss fraction-free elimination on Python ints.

    Columns without a pivot are skipped; the remaining entries are then the
    same minors Bareiss would produce with those columns deleted, so every
    division stays exact.
    """
    a = np.array(m.entries, dtype=object)
    rows, cols = a.shape
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        p = a[r, c]
        below = a[r + 1 :, c]
        if r + 1 < rows:
            block = a[r + 1 :, c + 1 :]
            a[r + 1 :, c + 1 :] = (p * block - np.outer(below, a[r, c + 1 :])) // prev
            a[r + 1 :, c] = 0
        prev = p
        r += 1
    return r


def rank_gf2(m: BooleanMatrix) -> int:
    """Rank over GF(2) with each row packed into a Python int."""
    rows = [int("".join("1" if x else "0" for x in row) or "0", 2) for row in m.entries]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [x ^ pivot if x & low else x for x in rows]
    return rank


def rank_exact(m: BooleanMatrix, field: str = "rationals") -> int:
    if field in ("rationals", "q", "Q"):
        return rank_rational(m)
    if field in ("gf2", "GF2"):
        return rank_gf2(m)
    raise ValueError(f"unknown field {field!r}")


# ---------------------------------------------------------------------------
# fooling sets


@dataclass(frozen=True)
class FoolingSetClaim:
    cells: tuple[tuple[int, int], ...]
    z: int = 0

    def __post_init__(self):
        if self.z not in (0, 1):
            raise ValueError("z must be 0 or 1")
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))

    @classmethod
    def diagonal(cls, order: int, z: int = 0) -> "FoolingSetClaim":
        return cls(tuple((x, x) for x in range(1, order + 1)), z)


def verify_fooling_set(m: BooleanMatrix, claim: FoolingSetClaim) -> bool:
    n = m.order
    for r, c in claim.cells:
        if not (1 <= r <= n and 1 <= c <= n):
            raise ValueError(f"cell ({r}, {c}) outside a {n}x{n} matrix")
    z = claim.z
    cells = list(dict.fromkeys(claim.cells))
    if any(m[cell] != z for cell in cells):
        return False
    for x, (k1, l1) in enumerate(cells):
        for k2, l2 in cells[x + 1 :]:
            if m[k1, l2] == z and m[k2, l1] == z:
                return False
    return True


# ---------------------------------------------------------------------------
# gap report


@dataclass
class GapReport:
    n_vertices: int
    size: int
    rank_q: int
    rank_gf2: int
    fool_lower_bound: int
    exponent: Optional[float]
    dhs_bound: int

    def to_json(self) -> dict:
        return {
            "N": self.n_vertices,
            "m": self.size,
            "rank_q": self.rank_q,
            "rank_gf2": self.rank_gf2,
            "fool_lower_bound": self.fool_lower_bound,
            "exponent": self.exponent,
            "dhs_bound": self.dhs_bound,
        }


def gap_report(p: OrderedPartition) -> GapReport:
    m = partition_to_matrix(p)
    n = m.order
    rq = rank_rational(m)
    if not verify_fooling_set(m, FoolingSetClaim.diagonal(n)):
        raise AssertionError("diagonal is not a 0-fooling set of a verified partition matrix")
    if rq > len(p):
        raise AssertionError(f"rank {rq} exceeds number of rank-one summands {len(p)}")
    if n > (rq + 1) ** 2:
        raise AssertionError(f"fooling set {n} exceeds (rank+1)^2 = {(rq + 1) ** 2}")
    exponent = math.log(n) / math.log(rq) if rq >= 2 else None
    return GapReport(n, len(p), rq, rank_gf2(m), n, exponent, (rq + 1) ** 2)
