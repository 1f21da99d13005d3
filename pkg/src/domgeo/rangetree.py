"""Multi-level range tree over feature points with nearest-site indexes.

Level ``l`` sorts its points by feature coordinate ``l`` (ties by index) and
splits them at the median, recursively. Every node of a level below the last
owns a complete tree of the next level over its points; every node of a
last-level tree owns a :class:`StaticNNIndex` over the real-space locations
of its points.

A rectangle query bisects each level's sorted keys to a contiguous run,
covers the run with O(log n) canonical nodes, and recurses into their
associated trees. On the last level, each canonical node contributes its
nearest site instead of its points.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import ceil, log2

from .errors import UsageError
from .geometry import closer
from .staticnn import SCAN_THRESHOLD, build_static_nn


class _LevelTree:
    __slots__ = ("dim", "ids", "keys", "payload")

    def __init__(self, ds, ids, dim, owner):
        Q = ds.Q
        ids = sorted(ids, key=lambda i: (Q[i][dim], i))
        self.dim = dim
        self.ids = ids
        self.keys = [Q[i][dim] for i in ids]
        self.payload = {}
        last = dim == ds.d_feat - 1
        P = ds.P
        stack = [(1, 0, len(ids))]
        while stack:
            k, lo, hi = stack.pop()
            if last:
                self.payload[k] = build_static_nn([(P[i], i) for i in ids[lo:hi]],
                                                  scan_threshold=owner.scan_threshold)
                owner.indexes_built += 1
                owner.total_indexed_points += hi - lo
            else:
                self.payload[k] = _LevelTree(ds, ids[lo:hi], dim + 1, owner)
            if hi - lo > 1:
                mid = (lo + hi) // 2
                stack.append((2 * k + 1, mid, hi))
                stack.append((2 * k, lo, mid))

    def span(self, lower, upper, lower_closed, upper_closed):
        """Index run [L, R) of points whose key satisfies the interval."""
        keys = self.keys
        L = bisect_left(keys, lower) if lower_closed else bisect_right(keys, lower)
        R = bisect_right(keys, upper) if upper_closed else bisect_left(keys, upper)
        return L, R

    def cover(self, L, R):
        """Canonical nodes ``(k, lo, hi)`` exactly tiling the run [L, R)."""
        out = []
        if L >= R:
            return out
        stack = [(1, 0, len(self.ids))]
        while stack:
            k, lo, hi = stack.pop()
            if hi <= L or R <= lo:
                continue
            if L <= lo and hi <= R:
                out.append((k, lo, hi))
                continue
            mid = (lo + hi) // 2
            stack.append((2 * k + 1, mid, hi))
            stack.append((2 * k, lo, mid))
        return out


@dataclass(frozen=True)
class CanonicalNode:
    """A last-level node whose whole subtree lies inside the query box."""

    tree: _LevelTree
    key: int
    lo: int
    hi: int

    @property
    def ids(self):
        return self.tree.ids[self.lo:self.hi]

    @property
    def index(self):
        return self.tree.payload[self.key]


class RangeTree:
    """Answers "nearest point to p whose features lie in box R" queries."""

    def __init__(self, ds, scan_threshold=SCAN_THRESHOLD):
        if ds.n < 1:
            raise UsageError("cannot build a range tree over an empty dataset")
        if ds.d_real not in (1, 2):
            raise UsageError("range tree supports real-space dimension 1 or 2")
        self.ds = ds
        self.scan_threshold = scan_threshold
        self.indexes_built = 0
        self.total_indexed_points = 0
        self.node_visits = 0
        self.root = _LevelTree(ds, range(ds.n), 0, self)

    @property
    def n(self):
        return self.ds.n

    @property
    def d_feat(self):
        return self.ds.d_feat

    def canonical_nodes(self, r):
        if r.dim != self.ds.d_feat:
            raise UsageError("rectangle dimension does not match the feature space")
        out = []
        last = self.ds.d_feat - 1
        trees = [self.root]
        while trees:
            tree = trees.pop()
            d = tree.dim
            L, R = tree.span(r.lower[d], r.upper[d], r.lower_closed[d], r.upper_closed[d])
            nodes = tree.cover(L, R)
            self.node_visits += len(nodes) + 1
            if d == last:
                out.extend(CanonicalNode(tree, k, lo, hi) for k, lo, hi in nodes)
            else:
                trees.extend(tree.payload[k] for k, _, _ in nodes)
        return out

    def query_nearest_in_rect(self, p, r):
        if len(p) != self.ds.d_real:
            raise UsageError("query point dimension does not match the real space")
        P = self.ds.P
        best = None
        for node in self.canonical_nodes(r):
            cand = node.index.nearest(p)
            if best is None or closer(p, P[cand.index], cand.index, P[best.index], best.index):
                best = cand
        return best


def build_range_tree(ds, scan_threshold=SCAN_THRESHOLD):
    return RangeTree(ds, scan_threshold=scan_threshold)


def canonical_nodes(t, r):
    return t.canonical_nodes(r)


def query_nearest_in_rect(t, p, r):
    return t.query_nearest_in_rect(p, r)


def indexed_points_bound(n, d_feat):
    return n * (ceil(log2(n)) + 1) ** d_feat


def canonical_set_bound(n, d_feat):
    return (2 * ceil(log2(n)) + 2) ** d_feat


@lru_cache(maxsize=None)
def structural_indexed_points(n, levels):
    """Points stored across last-level indexes of an ``levels``-level tree on n points.

    Median splitting makes every node size a function of n alone, so this
    recursion reproduces ``total_indexed_points`` without building anything.
    """
    if levels == 0:
        return n
    here = structural_indexed_points(n, levels - 1)
    if n == 1:
        return here
    half = n // 2
    return here + structural_indexed_points(half, levels) + structural_indexed_points(n - half, levels)


@lru_cache(maxsize=None)
def structural_indexes_built(n, levels):
    """Number of last-level nodes (one index each) of an ``levels``-level tree."""
    if levels == 0:
        return 1
    here = structural_indexes_built(n, levels - 1)
    if n == 1:
        return here
    half = n // 2
    return here + structural_indexes_built(half, levels) + structural_indexes_built(n - half, levels)

