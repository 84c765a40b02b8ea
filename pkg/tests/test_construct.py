import functools
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from obpart.construct import (
    BudgetExceeded,
    StarOrdering,
    build_family_bicliques,
    build_partition,
    default_ordering,
    predicted_size,
    star_partition,
)
from obpart.core import C, D, E, all_coords, classify_edge, families

from oracles import edge_multiset
from test_core import small_params


def as_lists(bicliques):
    return [(b.first_side, b.second_side) for b in bicliques]


def test_star_partition_k3():
    stars = star_partition([1, 2, 3], lambda a, b: a != b)
    assert as_lists(stars) == [((1,), (2, 3)), ((2,), (3,))]


def test_k3_needs_two_bicliques():
    # one biclique cannot cover a triangle: some side holds two vertices
    for u_size in (1, 2):
        for u in itertools.combinations((1, 2, 3), u_size):
            w = tuple(x for x in (1, 2, 3) if x not in u)
            assert len(edge_multiset([(u, w)])) < 3


def test_star_partition_grid_complement_2x2():
    order = [(1, 1), (1, 2), (2, 1), (2, 2)]
    stars = star_partition(order, lambda a, b: a[0] != b[0] and a[1] != b[1])
    assert as_lists(stars) == [(((1, 1),), ((2, 2),)), (((1, 2),), ((2, 1),))]


def test_star_partition_single_vertex():
    assert star_partition([7], lambda a, b: True) == []


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_star_partition_grid_complement_row_major(n):
    order = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    stars = star_partition(order, lambda a, b: a[0] != b[0] and a[1] != b[1])
    assert len(stars) <= n * (n - 1)
    assert len(stars) <= n * n - 1


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.data())
def test_star_partition_random_graphs(m, data):
    verts = list(range(1, m + 1))
    edges = {
        frozenset(e)
        for e in itertools.combinations(verts, 2)
        if data.draw(st.booleans())
    }
    order = data.draw(st.permutations(verts))
    stars = star_partition(order, lambda a, b: frozenset((a, b)) in edges)
    cover = edge_multiset(as_lists(stars))
    assert set(cover) == edges
    assert all(c == 1 for c in cover.values())
    assert len(stars) <= max(m - 1, 0)


@pytest.mark.parametrize(
    "n,k,expected", [(2, 2, 8), (3, 3, 132), (4, 3, 348), (3, 2, 24), (2, 3, 30), (2, 1, 1)]
)
def test_predicted_size(n, k, expected):
    assert predicted_size(n, k) == expected


@functools.lru_cache(maxsize=None)
def _edges_by_family(n, k):
    verts = all_coords(n, k)
    out = {}
    for a, b in itertools.combinations(range(len(verts)), 2):
        for fam in classify_edge(verts[a], verts[b], n, k):
            out.setdefault(fam, set()).add(frozenset((a + 1, b + 1)))
    return out


def family_edges(fam, n, k):
    return _edges_by_family(n, k).get(fam, set())


def test_family_c0_example():
    bs = build_family_bicliques(C(0), 2, 2)
    assert len(bs) == 2
    cover = edge_multiset(as_lists(bs))
    assert len(cover) == 8 and set(cover.values()) == {1}
    verts = all_coords(2, 2)
    for e in cover:
        a, b = (verts[x - 1] for x in e)
        assert a[0] == b[0] and a[1] != b[1]


def test_family_e11_example():
    bs = build_family_bicliques(E(1, 1), 2, 2)
    assert len(bs) == 2
    cover = edge_multiset(as_lists(bs))
    # 8 ordered choices of u, then v fixed on x_1, x_3 and free on x_2: 16 ordered, 8 edges
    assert len(cover) == 8 and set(cover.values()) == {1}
    assert set(cover) == family_edges(E(1, 1), 2, 2)


def test_k1_degenerate():
    p = build_partition(2, 1)
    assert as_lists(p.bicliques) == [((1,), (2,))]


@pytest.mark.parametrize("n,k", [(n, k) for n, k in small_params() if k > 1])
def test_family_exactness(n, k):
    for fam in families(k):
        bs = build_family_bicliques(fam, n, k)
        cover = edge_multiset(as_lists(bs))
        assert set(cover.values()) <= {1}, fam
        assert set(cover) == family_edges(fam, n, k), fam
        want = n ** (k - 1) * (n - 1) if fam.kind in "CD" else n**fam.i * (n - 1)
        assert len(bs) == want, fam


@pytest.mark.parametrize("n,k", small_params())
def test_partition_size_matches_formula(n, k):
    assert len(build_partition(n, k)) == predicted_size(n, k)


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)])
def test_orientation_law(n, k):
    verts = all_coords(n, k)
    owner = {}
    for fam in families(k):
        for b in build_family_bicliques(fam, n, k):
            for a, c in b.ordered_pairs():
                owner.setdefault(frozenset((a, c)), []).append((fam, b))
    doubles = {e: bs for e, bs in owner.items() if len(bs) == 2}
    assert doubles or k == 1
    for e, covers in doubles.items():
        (cf, cb), (ef, eb) = sorted(covers, key=lambda t: t[0])
        assert cf.kind == "C" and ef.kind == "E" and cf.i == ef.i
        i = cf.i
        x, y = sorted(e, key=lambda z: verts[z - 1][k + i - 1])
        assert verts[x - 1][k + i - 1] < verts[y - 1][k + i - 1]
        assert x in cb.first_side and y in cb.second_side
        assert x in eb.second_side and y in eb.first_side


def test_partition_concatenates_families_in_order():
    p = build_partition(2, 3)
    expect = [b for fam in families(3) for b in build_family_bicliques(fam, 2, 3)]
    assert list(p.bicliques) == expect


def test_default_orderings():
    assert default_ordering(C(1), 4) == StarOrdering((5, 4, 3, 2), "ascending")
    assert default_ordering(E(3, 2), 4) == StarOrdering((7, 6, 2, 1), "descending")
    assert default_ordering(D(3), 4).significance[0] == 3


def test_reversed_c_order_breaks_orientation():
    # with C roots also picked descending, both stars point the same way
    from obpart.verify import verify_ordered

    flipped = StarOrdering(default_ordering(C(1), 2).significance, "descending")
    p = build_partition(2, 2, orderings={C(1): flipped})
    ok, rep = verify_ordered(p)
    assert not ok
    assert {r for _, r in rep.violations} == {"same-orientation-double"}


def test_bad_ordering_rejected():
    with pytest.raises(ValueError):
        build_family_bicliques(C(0), 2, 2, StarOrdering((3,), "ascending"))


def test_invalid_family():
    with pytest.raises(ValueError):
        build_family_bicliques(E(1, 2), 2, 3)
    with pytest.raises(ValueError):
        build_family_bicliques(D(2), 2, 2)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        build_partition(2, 99)
    with pytest.raises(BudgetExceeded):
        build_partition(3, 3, max_vertices=100)


def test_deterministic():
    assert build_partition(3, 2) == build_partition(3, 2)
