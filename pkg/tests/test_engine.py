import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgeo.engine import (
    Counters,
    check_algorithm,
    nearest_dominator_offline,
    nearest_dominator_rangetree,
    nearest_dominator_sweep,
    nearest_dominators,
    sort_via_dominators,
)
from domgeo.errors import UsageError
from domgeo.geometry import Dataset, dominates, squared_distance
from domgeo.oracle import brute_nearest_dominator, brute_nn, brute_rect_query
from domgeo.geometry import QueryRect

from helpers import random_dataset

THREE = Dataset.from_points([(0.0,), (1.0,), (5.0,)], [(0.0, 0.0), (2.0, 2.0), (1.0, 1.0)])


def _valid(ds, res):
    for i, r in enumerate(res):
        if r is None:
            assert not any(dominates(q, ds.Q[i]) for q in ds.Q)
        else:
            assert dominates(ds.Q[r.index], ds.Q[i])
            assert r.sqdist == squared_distance(ds.P[i], ds.P[r.index])


@pytest.mark.parametrize("algo", ["brute", "sweep", "rangetree"])
def test_three_point_example(algo):
    res = nearest_dominators(THREE, algo)
    assert res == [(1, 1.0), None, (1, 16.0)]


@pytest.mark.parametrize("algo", ["brute", "sweep", "rangetree", "offline"])
def test_single_point(algo):
    d_real = 1 if algo == "sweep" else 2
    ds = Dataset.from_points([(0.5,) * d_real], [(0.1, 0.2)])
    assert nearest_dominators(ds, algo) == [None]


@pytest.mark.parametrize("algo", ["sweep", "rangetree"])
def test_identical_features_all_none(algo):
    ds = Dataset.from_points([(float(i),) for i in range(20)], [(1.0, 1.0)] * 20)
    assert nearest_dominators(ds, algo) == [None] * 20


def test_sweep_equals_rangetree(rng):
    for _ in range(60):
        ds = random_dataset(rng, rng.randint(1, 120), 1, 2)
        assert nearest_dominator_sweep(ds) == nearest_dominator_rangetree(ds)


def test_offline_equals_rangetree(rng):
    for _ in range(40):
        ds = random_dataset(rng, rng.randint(1, 120), 2, 2)
        assert nearest_dominator_offline(ds) == nearest_dominator_rangetree(ds)


@pytest.mark.parametrize("algo", ["sweep", "rangetree", "offline"])
def test_antichain_all_none(algo, rng):
    d_real = 1 if algo == "sweep" else 2
    P = [tuple(rng.random() for _ in range(d_real)) for _ in range(50)]
    ds = Dataset.from_points(P, [(float(i), float(-i)) for i in range(50)])
    assert nearest_dominators(ds, algo) == [None] * 50


@pytest.mark.parametrize("algo", ["sweep", "rangetree", "offline"])
def test_chain_matches_oracle(algo, rng):
    d_real = 1 if algo == "sweep" else 2
    P = [tuple(rng.random() for _ in range(d_real)) for _ in range(80)]
    ds = Dataset.from_points(P, [(float(i), float(i)) for i in range(80)])
    res = nearest_dominators(ds, algo)
    assert res == brute_nearest_dominator(ds)
    assert res[-1] is None and all(r is not None for r in res[:-1])


def test_three_ratings_matches_oracle(rng):
    for d_real in (1, 2):
        ds = random_dataset(rng, 128, d_real, 3)
        res = nearest_dominator_rangetree(ds)
        assert res == brute_nearest_dominator(ds)
        _valid(ds, res)


def test_counters_populated(rng):
    ds = random_dataset(rng, 64, 2, 2)
    for algo in ("sweep", "rangetree", "offline", "brute"):
        c = Counters()
        d = ds if algo != "sweep" else random_dataset(rng, 64, 1, 2)
        nearest_dominators(d, algo, c)
        assert c.node_visits > 0
        c2 = Counters()
        nearest_dominators(d, algo, c2)
        assert c == c2


def test_offline_sweep_invariant(rng):
    ds = random_dataset(rng, 150, 2, 2, dup_rate=0.6, levels=4)
    Q = ds.Q

    def observer(batch, tree):
        y = Q[batch[0]][1]
        assert tree.root_ids() == {j for j in range(ds.n) if Q[j][1] > y}

    nearest_dominator_offline(ds, observer=observer)


def test_dimension_errors():
    ds2 = Dataset.from_points([(0.0, 0.0)], [(0.0, 0.0)])
    with pytest.raises(UsageError):
        nearest_dominator_sweep(ds2)
    with pytest.raises(UsageError):
        nearest_dominator_offline(THREE)
    with pytest.raises(UsageError):
        nearest_dominator_rangetree(Dataset.from_points([(0.0,) * 3], [(0.0, 0.0)]))
    with pytest.raises(UsageError):
        check_algorithm("quantum", 1, 2)
    with pytest.raises(UsageError):
        check_algorithm("offline", 2, 3)


class TestSort:
    def test_examples(self):
        assert sort_via_dominators([3, 1, 2]) == [1, 2, 3]
        assert sort_via_dominators([42]) == [42]
        assert sort_via_dominators([]) == []

    def test_duplicates_rejected(self):
        with pytest.raises(UsageError):
            sort_via_dominators([1, 2, 1])

    @pytest.mark.parametrize("algo", ["sweep", "rangetree"])
    def test_random(self, algo):
        rng = random.Random(3)
        xs = list({rng.uniform(-1e6, 1e6) for _ in range(2000)})
        assert sort_via_dominators(xs, algo) == sorted(xs)

    def test_ten_thousand(self, rng):
        xs = list({rng.random() for _ in range(10 ** 4)})
        assert sort_via_dominators(xs) == sorted(xs)


class TestOracle:
    def test_three_point(self):
        assert brute_nearest_dominator(THREE) == [(1, 1.0), None, (1, 16.0)]

    def test_rect_full_space_is_global_nn(self, rng):
        ds = random_dataset(rng, 60, 2, 2)
        p = (2.5, 2.5)
        want = brute_nn(list(zip(ds.P, range(ds.n))), p)
        assert brute_rect_query(ds, p, QueryRect.full(2)) == want

    def test_brute_nn_errors_and_ties(self):
        with pytest.raises(UsageError):
            brute_nn([], (0.0,))
        assert brute_nn([((1.0,), 4), ((1.0,), 2)], (0.0,)) == (2, 1.0)

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                              st.integers(0, 3)), min_size=1, max_size=25))
    @settings(max_examples=150)
    def test_reported_pairs_are_dominators(self, rows):
        ds = Dataset.from_points([tuple(map(float, r[:2])) for r in rows],
                                 [tuple(map(float, r[2:])) for r in rows])
        _valid(ds, brute_nearest_dominator(ds))
