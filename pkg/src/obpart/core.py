"""Vertex indexing, the biclique data model, and the edge families C_i, D_j, E_{i,j}.

Vertices of K_{n^(2k-1)} are points of [n]^(2k-1).  Coordinates are 1-based,
and flat vertex indices are 1-based too, with x_1 the least significant digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

Coords = tuple[int, ...]

# Maps an unreduced coordinate position p (may exceed 2k-1) into 1..2k-1.
WrapFn = Callable[[int, int], int]


def wrap_position(p: int, k: int) -> int:
    return (p - 1) % (2 * k - 1) + 1


# ---------------------------------------------------------------------------
# Vertices


def dimension(k: int) -> int:
    return 2 * k - 1


def vertex_count(n: int, k: int) -> int:
    return n ** dimension(k)


def _check_params(n: int, k: int) -> None:
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")


def check_coords(coords: Sequence[int], n: int, k: int) -> None:
    _check_params(n, k)
    if len(coords) != dimension(k):
        raise ValueError(f"expected {dimension(k)} coordinates, got {len(coords)}")
    for t, x in enumerate(coords, start=1):
        if not 1 <= x <= n:
            raise ValueError(f"coordinate x_{t}={x} outside [1, {n}]")


def index_of(coords: Sequence[int], n: int, k: int) -> int:
    """Flat 1-based index of a vertex; x_1 is the least significant digit."""
    check_coords(coords, n, k)
    idx = 0
    for x in reversed(coords):
        idx = idx * n + (x - 1)
    return idx + 1


def coords_of(index: int, n: int, k: int) -> Coords:
    _check_params(n, k)
    total = vertex_count(n, k)
    if not 1 <= index <= total:
        raise IndexError(f"vertex index {index} outside [1, {total}]")
    rest = index - 1
    out = []
    for _ in range(dimension(k)):
        rest, digit = divmod(rest, n)
        out.append(digit + 1)
    return tuple(out)


def all_coords(n: int, k: int) -> list[Coords]:
    """All vertices in flat-index order (position 0 holds vertex 1)."""
    return [coords_of(x, n, k) for x in range(1, vertex_count(n, k) + 1)]


# ---------------------------------------------------------------------------
# Bicliques and partitions


@dataclass(frozen=True)
class Biclique:
    first_side: tuple[int, ...]
    second_side: tuple[int, ...]

    def __post_init__(self):
        u = tuple(sorted(set(self.first_side)))
        w = tuple(sorted(set(self.second_side)))
        if len(u) != len(self.first_side) or len(w) != len(self.second_side):
            raise ValueError("biclique side contains a repeated vertex")
        if not u or not w:
            raise ValueError("biclique sides must be nonempty")
        if set(u) & set(w):
            raise ValueError(f"biclique sides overlap on {sorted(set(u) & set(w))}")
        object.__setattr__(self, "first_side", u)
        object.__setattr__(self, "second_side", w)

    def ordered_pairs(self) -> Iterator[tuple[int, int]]:
        for a in self.first_side:
            for b in self.second_side:
                yield a, b


@dataclass(frozen=True)
class OrderedPartition:
    """A candidate ordered biclique partition of K_N on vertices 1..N."""

    universe_size: int
    bicliques: tuple[Biclique, ...]

    def __post_init__(self):
        object.__setattr__(self, "bicliques", tuple(self.bicliques))
        if self.universe_size < 1:
            raise ValueError("universe_size must be positive")
        for pos, b in enumerate(self.bicliques):
            for side in (b.first_side, b.second_side):
                if side[0] < 1 or side[-1] > self.universe_size:
                    raise ValueError(
                        f"biclique {pos} references a vertex outside [1, {self.universe_size}]"
                    )

    def __len__(self) -> int:
        return len(self.bicliques)

    def to_json(self) -> dict:
        return {
            "n_vertices": self.universe_size,
            "bicliques": [
                {"u": list(b.first_side), "w": list(b.second_side)} for b in self.bicliques
            ],
        }


# ---------------------------------------------------------------------------
# Edge families


class EdgeFamilyId(NamedTuple):
    """One of C_i, D_j, E_{i,j}.  Unused parameters are 0."""

    kind: str
    i: int = 0
    j: int = 0

    def __str__(self) -> str:
        if self.kind == "C":
            return f"C_{self.i}"
        if self.kind == "D":
            return f"D_{self.j}"
        return f"E_{{{self.i},{self.j}}}"


def C(i: int) -> EdgeFamilyId:
    return EdgeFamilyId("C", i, 0)


def D(j: int) -> EdgeFamilyId:
    return EdgeFamilyId("D", 0, j)


def E(i: int, j: int) -> EdgeFamilyId:
    return EdgeFamilyId("E", i, j)


def check_family(fam: EdgeFamilyId, k: int) -> None:
    kind, i, j = fam
    ok = (
        (kind == "C" and 0 <= i <= k - 1 and j == 0)
        or (kind == "D" and i == 0 and 1 <= j <= k - 1)
        or (kind == "E" and 1 <= i <= k - 1 and 1 <= j <= i)
    )
    if not ok:
        raise ValueError(f"invalid edge family {fam!r} for k={k}")


def families(k: int) -> list[EdgeFamilyId]:
    """All families in emission order: C by i, then D by j, then E by (i, j)."""
    out = [C(i) for i in range(k)]
    out += [D(j) for j in range(1, k)]
    out += [E(i, j) for i in range(1, k) for j in range(1, i + 1)]
    return out


@dataclass(frozen=True)
class FamilyConstraint:
    """Positions where endpoints must agree / must differ; others are free."""

    equal: tuple[int, ...]
    differ: tuple[int, ...]

    def holds(self, u: Sequence[int], v: Sequence[int]) -> bool:
        for p in self.differ:
            if u[p - 1] == v[p - 1]:
                return False
        for p in self.equal:
            if u[p - 1] != v[p - 1]:
                return False
        return True


def family_constraint(fam: EdgeFamilyId, k: int, wrap: WrapFn = wrap_position) -> FamilyConstraint:
    check_family(fam, k)
    kind, i, j = fam
    if kind == "C":
        return FamilyConstraint(tuple(i + l for l in range(1, k)), (k + i,))
    if kind == "D":
        return FamilyConstraint(tuple(wrap(k + j + l, k) for l in range(k - 1)), (j,))
    eq = tuple(range(1, j)) + tuple(range(k + j, k + i))
    return FamilyConstraint(eq, (j, k + i))


def family_pattern(fam: EdgeFamilyId, k: int) -> str:
    """Per-coordinate pattern: 'o' equal, 'x' differ, '-' free (one char per x_t)."""
    con = family_constraint(fam, k)
    chars = []
    for p in range(1, dimension(k) + 1):
        chars.append("x" if p in con.differ else "o" if p in con.equal else "-")
    return "".join(chars)


def classify_edge(
    u: Sequence[int], v: Sequence[int], n: int, k: int, wrap: WrapFn = wrap_position
) -> set[EdgeFamilyId]:
    """All families whose defining predicate holds for the edge {u, v}."""
    check_coords(u, n, k)
    check_coords(v, n, k)
    if tuple(u) == tuple(v):
        raise ValueError("u and v must be distinct vertices")
    return {f for f in families(k) if family_constraint(f, k, wrap).holds(u, v)}


def pairs(n_vertices: int) -> Iterable[tuple[int, int]]:
    """Unordered pairs (a, b), a < b, of 1-based vertex indices."""
    for a in range(1, n_vertices + 1):
        for b in range(a + 1, n_vertices + 1):
            yield a, b
