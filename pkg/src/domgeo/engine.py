"""Nearest-dominator algorithms.

``sweep``
    1-D locations, 2-D ratings. Sweeps the locations left to right and right
    to left with a priority search tree; each point claims every stored
    point it dominates as that point's nearest dominator on the swept side.
``rangetree``
    1-D or 2-D locations, any number of ratings. One nearest-in-box query
    per point over the open orthant above its ratings.
``offline``
    2-D locations, 2-D ratings. Visits points by decreasing second rating
    and keeps insertion-only nearest-site indexes on the nodes of a 1-D tree
    over the first rating, so each query only constrains one coordinate.
``brute``
    the quadratic oracle.

Every algorithm returns one entry per point: ``None`` when nothing dominates
it, else ``Neighbor(index, sqdist)`` minimising exact squared distance with
ties going to the smaller index.
"""

from bisect import bisect_right
from dataclasses import dataclass
from itertools import groupby

from .dynamic import DynamicNNIndex
from .errors import UsageError
from .geometry import Dataset, Neighbor, QueryRect, closer, squared_distance
from .oracle import brute_nearest_dominator
from .pst import PrioritySearchTree
from .rangetree import RangeTree
from .staticnn import SCAN_THRESHOLD


@dataclass
class Counters:
    """Deterministic work counters reported by the benchmark."""

    node_visits: int = 0
    indexes_built: int = 0
    indexed_points: int = 0


def _require(ds, name, d_real=None, d_feat=None):
    if d_real is not None and ds.d_real not in d_real:
        raise UsageError(f"{name} needs real-space dimension in {sorted(d_real)}, got {ds.d_real}")
    if d_feat is not None and ds.d_feat not in d_feat:
        raise UsageError(f"{name} needs feature dimension in {sorted(d_feat)}, got {ds.d_feat}")


def _sweep_one_side(ds, groups, counters):
    """First dominator met by each point when visiting ``groups`` in order.

    Points sharing a location form a group: the whole group is inserted
    before any member queries, and members query in increasing index, so
    the first claim on a point is the smallest-index dominator at the
    nearest location on this side (the point's own location included).
    """
    Q = ds.Q
    pst = PrioritySearchTree()
    claimed = {}
    for group in groups:
        for i in group:
            x, y = Q[i]
            pst.insert(x, y, i)
        for i in group:
            x, y = Q[i]
            for j in pst.query_dominated(x, y):
                claimed[j] = i
                pst.delete(j)
    if counters is not None:
        counters.node_visits += pst.nodes_visited
    return claimed


def nearest_dominator_sweep(ds, counters=None):
    _require(ds, "sweep", d_real={1}, d_feat={2})
    P = ds.P
    order = sorted(range(ds.n), key=lambda i: (P[i][0], i))
    groups = [list(g) for _, g in groupby(order, key=lambda i: P[i][0])]
    right = _sweep_one_side(ds, groups, counters)
    left = _sweep_one_side(ds, reversed(groups), counters)

    out = []
    for i in range(ds.n):
        r, l = right.get(i), left.get(i)
        if r is None:
            best = l
        elif l is None:
            best = r
        else:
            best = r if closer(P[i], P[r], r, P[l], l) else l
        out.append(None if best is None else Neighbor(best, squared_distance(P[i], P[best])))
    return out


def nearest_dominator_rangetree(ds, counters=None, scan_threshold=SCAN_THRESHOLD):
    _require(ds, "rangetree", d_real={1, 2})
    if ds.n == 0:
        return []
    tree = RangeTree(ds, scan_threshold=scan_threshold)
    out = [tree.query_nearest_in_rect(p, QueryRect.upper_quadrant(q)) for p, q in zip(ds.P, ds.Q)]
    if counters is not None:
        counters.indexes_built += tree.indexes_built
        counters.indexed_points += tree.total_indexed_points
        counters.node_visits += tree.node_visits
    return out


class _XTree:
    """Balanced tree over points sorted by first rating, one dynamic index per node."""

    def __init__(self, ds, scan_threshold):
        Q = ds.Q
        self.order = sorted(range(ds.n), key=lambda i: (Q[i][0], i))
        self.keys = [Q[i][0] for i in self.order]
        self.pos = {i: k for k, i in enumerate(self.order)}
        self.nn = {}
        self.scan_threshold = scan_threshold
        self.visits = 0

    def cover(self, L, R):
        out = []
        n = len(self.order)
        stack = [(1, 0, n)] if L < R else []
        while stack:
            k, lo, hi = stack.pop()
            self.visits += 1
            if hi <= L or R <= lo:
                continue
            if L <= lo and hi <= R:
                out.append(k)
                continue
            mid = (lo + hi) // 2
            stack.append((2 * k + 1, mid, hi))
            stack.append((2 * k, lo, mid))
        return out

    def insert(self, i, point):
        target = self.pos[i]
        k, lo, hi = 1, 0, len(self.order)
        while True:
            self.visits += 1
            idx = self.nn.get(k)
            if idx is None:
                idx = self.nn[k] = DynamicNNIndex(self.scan_threshold)
            idx.insert(point, i)
            if hi - lo == 1:
                break
            mid = (lo + hi) // 2
            if target < mid:
                k, hi = 2 * k, mid
            else:
                k, lo = 2 * k + 1, mid

    def root_ids(self):
        root = self.nn.get(1)
        return root.ids() if root is not None else set()


def nearest_dominator_offline(ds, counters=None, scan_threshold=SCAN_THRESHOLD, observer=None):
    """Offline sweep over decreasing second rating.

    Before a batch of points sharing one second rating is queried, the
    indexes hold exactly the points with a strictly larger second rating,
    so a query need only ask for a strictly larger first rating. The whole
    batch queries before any of it is inserted.

    ``observer(batch, tree)`` is called before each batch, for tests.
    """
    _require(ds, "offline", d_real={2}, d_feat={2})
    P, Q = ds.P, ds.Q
    n = ds.n
    tree = _XTree(ds, scan_threshold)
    by_y = sorted(range(n), key=lambda i: (-Q[i][1], i))
    out = [None] * n
    for _, batch in groupby(by_y, key=lambda i: Q[i][1]):
        batch = list(batch)
        if observer is not None:
            observer(batch, tree)
        for i in batch:
            p = P[i]
            best = None
            for k in tree.cover(bisect_right(tree.keys, Q[i][0]), n):
                idx = tree.nn.get(k)
                if idx is None:
                    continue
                cand = idx.nearest(p)
                if cand is not None and (best is None or closer(
                        p, P[cand.index], cand.index, P[best.index], best.index)):
                    best = cand
            out[i] = best
        for i in batch:
            tree.insert(i, P[i])
    if counters is not None:
        counters.node_visits += tree.visits
        counters.indexes_built += len(tree.nn)
        counters.indexed_points += sum(idx.rebuilt_sites for idx in tree.nn.values())
    return out


def nearest_dominator_brute(ds, counters=None):
    return brute_nearest_dominator(ds, counters)


ALGORITHMS = {
    "brute": nearest_dominator_brute,
    "sweep": nearest_dominator_sweep,
    "rangetree": nearest_dominator_rangetree,
    "offline": nearest_dominator_offline,
}

# Supported (d_real, d_feat) per algorithm; None means any.
SUPPORTED_DIMS = {
    "brute": (None, None),
    "sweep": ({1}, {2}),
    "rangetree": ({1, 2}, None),
    "offline": ({2}, {2}),
}


def check_algorithm(name, d_real, d_feat):
    """Raise UsageError unless ``name`` can run on the given dimensions."""
    if name not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    reals, feats = SUPPORTED_DIMS[name]
    if reals is not None and d_real not in reals:
        raise UsageError(f"{name} needs real-space dimension in {sorted(reals)}, got {d_real}")
    if feats is not None and d_feat not in feats:
        raise UsageError(f"{name} needs feature dimension in {sorted(feats)}, got {d_feat}")


def nearest_dominators(ds, algo="rangetree", counters=None):
    check_algorithm(algo, ds.d_real, ds.d_feat)
    return ALGORITHMS[algo](ds, counters)


def sort_via_dominators(xs, algo="sweep"):
    """Sort distinct numbers by following nearest-dominator links.

    Each x becomes location x with ratings (x, x); the nearest point that
    dominates it is its successor in sorted order. Starting at the minimum
    and following the links visits every value in ascending order.
    """
    xs = [float(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise UsageError("values must be pairwise distinct")
    if not xs:
        return []
    ds = Dataset.from_points([(x,) for x in xs], [(x, x) for x in xs], 1, 2)
    links = nearest_dominators(ds, algo)
    i = min(range(len(xs)), key=xs.__getitem__)
    out = [xs[i]]
    while links[i] is not None:
        i = links[i].index
        out.append(xs[i])
    if len(out) != len(xs):
        raise AssertionError("dominator chain does not cover the input")
    return out
