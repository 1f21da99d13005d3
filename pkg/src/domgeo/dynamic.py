"""Insertion-only nearest-site index built from static indexes.

The logarithmic method: sites live in buckets whose sizes are distinct powers
of two, mirroring the binary representation of the number of sites. An
insertion merges the run of full low buckets with the new site into one
freshly built static index, like a binary carry.
"""

from math import ceil, log2

from .errors import UsageError
from .geometry import closer
from .staticnn import SCAN_THRESHOLD, build_static_nn


class DynamicNNIndex:
    __slots__ = ("buckets", "_points", "scan_threshold", "rebuilt_sites")

    def __init__(self, scan_threshold=SCAN_THRESHOLD):
        # buckets[k] is None or a StaticNNIndex over exactly 2**k sites.
        self.buckets = []
        self._points = {}  # id -> point
        self.scan_threshold = scan_threshold
        self.rebuilt_sites = 0

    def __len__(self):
        return len(self._points)

    def ids(self):
        return set(self._points)

    def insert(self, point, ident):
        if ident in self._points:
            raise UsageError(f"id {ident} is already indexed")
        point = tuple(point)
        self._points[ident] = point
        carry = [(point, ident)]
        buckets = self.buckets
        k = 0
        while k < len(buckets) and buckets[k] is not None:
            carry.extend(buckets[k].sites)
            buckets[k] = None
            k += 1
        if k == len(buckets):
            buckets.append(None)
        buckets[k] = build_static_nn(carry, scan_threshold=self.scan_threshold)
        self.rebuilt_sites += len(carry)

    def nearest(self, query):
        """Nearest indexed site as (id, squared distance), or None when empty."""
        best = None
        best_pt = None
        for b in self.buckets:
            if b is None:
                continue
            cand = b.nearest(query)
            pt = self._points[cand.index]
            if best is None or closer(query, pt, cand.index, best_pt, best.index):
                best, best_pt = cand, pt
        return best

    def bucket_sizes(self):
        """Sizes of the non-empty buckets, largest first."""
        return [len(b) for b in reversed(self.buckets) if b is not None]

    def check_invariants(self):
        n = len(self._points)
        sizes = self.bucket_sizes()
        assert len(sizes) <= ceil(log2(n + 1)) + 1
        for k, b in enumerate(self.buckets):
            assert b is None or len(b) == 1 << k
        seen = [ident for b in self.buckets if b is not None for _, ident in b.sites]
        assert len(seen) == len(set(seen)) == n
        assert set(seen) == set(self._points)


def dynnn_insert(idx, point, ident):
    idx.insert(point, ident)


def dynnn_nearest(idx, query):
    return idx.nearest(query)
