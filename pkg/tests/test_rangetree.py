import math
import random
from collections import Counter

import pytest

from domgeo.errors import UsageError
from domgeo.geometry import Dataset, QueryRect, rect_contains
from domgeo.oracle import brute_rect_query
from domgeo.rangetree import (
    RangeTree,
    canonical_set_bound,
    indexed_points_bound,
    structural_indexed_points,
    structural_indexes_built,
)

from helpers import random_dataset, scan_nearest

SIX_POINTS = [(1, 3), (3, 8), (4, 2), (6.5, 1), (7, 4), (9, 6)]


def random_rect(rng, d, lo=-1.0, hi=7.0):
    lower, upper, lc, uc = [], [], [], []
    for _ in range(d):
        kind = rng.random()
        a, b = sorted((rng.uniform(lo, hi), rng.uniform(lo, hi)))
        if rng.random() < 0.3:
            a = float(round(a))
            b = max(a, float(round(b)))
        l_closed, u_closed = rng.random() < 0.5, rng.random() < 0.5
        if a == b:
            l_closed = u_closed = True
        if kind < 0.2:
            a, l_closed = -math.inf, False
        elif kind < 0.4:
            b, u_closed = math.inf, False
        lower.append(a)
        upper.append(b)
        lc.append(l_closed)
        uc.append(u_closed)
    return QueryRect(tuple(lower), tuple(upper), tuple(lc), tuple(uc))


def test_single_point():
    ds = Dataset.from_points([(0.0, 0.0)], [(1.0, 1.0)])
    t = RangeTree(ds)
    assert t.indexes_built == 1 and t.total_indexed_points == 1
    assert t.query_nearest_in_rect((5.0, 5.0), QueryRect.full(2)) == (0, 50.0)
    assert t.query_nearest_in_rect((5.0, 5.0), QueryRect.upper_quadrant((1.0, 0.0))) is None


def test_empty_dataset_rejected():
    with pytest.raises(UsageError):
        RangeTree(Dataset.from_points([], [], 1, 2))


def test_eight_points_counter_stable(rng):
    ds = random_dataset(rng, 8, 2, 2)
    a, b = RangeTree(ds), RangeTree(ds)
    assert a.total_indexed_points == b.total_indexed_points <= indexed_points_bound(8, 2) == 128
    assert a.indexes_built == b.indexes_built


def test_six_points_every_last_level_index_exact():
    pts = [(float(x), float(y)) for x, y in SIX_POINTS]
    ds = Dataset.from_points(pts, pts)
    t = RangeTree(ds, scan_threshold=0)
    seen = 0
    queries = [(x + 0.25, y - 0.5) for x in range(11) for y in range(10)]
    for outer in t.root.payload.values():
        for key, idx in outer.payload.items():
            seen += 1
            sites = idx.sites
            assert sorted(i for _, i in sites) == sorted(ds_ids(outer, key))
            assert all(p == ds.P[i] for p, i in sites)
            assert [idx.nearest(q).index for q in queries] == scan_nearest(sites, queries)
    assert seen == t.indexes_built


def ds_ids(tree, key):
    # Recover the run covered by heap node ``key`` by replaying the splits.
    lo, hi = 0, len(tree.ids)
    path = bin(key)[3:]
    for bit in path:
        mid = (lo + hi) // 2
        lo, hi = (lo, mid) if bit == "0" else (mid, hi)
    return tree.ids[lo:hi]


def test_full_space_and_empty_rect(rng):
    ds = random_dataset(rng, 100, 2, 2)
    t = RangeTree(ds)
    nodes = t.canonical_nodes(QueryRect.full(2))
    assert len(nodes) <= 2 ** 2
    assert sorted(i for nd in nodes for i in nd.ids) == list(range(100))
    far = QueryRect.closed((100.0, 100.0), (200.0, 200.0))
    assert t.canonical_nodes(far) == []
    assert t.query_nearest_in_rect((0.0, 0.0), far) is None


def test_rect_dimension_mismatch(rng):
    t = RangeTree(random_dataset(rng, 10, 1, 2))
    with pytest.raises(UsageError):
        t.canonical_nodes(QueryRect.full(3))
    with pytest.raises(UsageError):
        t.query_nearest_in_rect((0.0, 0.0), QueryRect.full(2))


@pytest.mark.parametrize("d_feat", [1, 2, 3])
def test_canonical_partition(d_feat):
    rng = random.Random(d_feat)
    ds = random_dataset(rng, 300, 1, d_feat)
    t = RangeTree(ds)
    bound = canonical_set_bound(300, d_feat)
    for _ in range(300):
        r = random_rect(rng, d_feat)
        nodes = t.canonical_nodes(r)
        got = Counter(i for nd in nodes for i in nd.ids)
        assert all(c == 1 for c in got.values())
        assert set(got) == {i for i, q in enumerate(ds.Q) if rect_contains(r, q)}
        assert len(nodes) <= bound


def test_query_matches_brute():
    rng = random.Random(11)
    ds = random_dataset(rng, 512, 2, 2)
    t = RangeTree(ds)
    for _ in range(1000):
        p = (rng.uniform(-1, 7), rng.uniform(-1, 7))
        r = random_rect(rng, 2)
        assert t.query_nearest_in_rect(p, r) == brute_rect_query(ds, p, r)


@pytest.mark.parametrize("n,d_feat", [(1, 2), (2, 2), (7, 3), (100, 2), (257, 2), (130, 3)])
def test_structural_counts_match_build(n, d_feat):
    ds = random_dataset(random.Random(n), n, 1, d_feat)
    t = RangeTree(ds)
    assert t.total_indexed_points == structural_indexed_points(n, d_feat)
    assert t.indexes_built == structural_indexes_built(n, d_feat)
    assert t.total_indexed_points <= indexed_points_bound(n, d_feat)
