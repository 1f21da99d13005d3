"""Immutable exact nearest-site index.

Four layouts share one query contract (exact squared distance, ties to the
smaller id):

``degenerate``
    at most two distinct sites, or all sites collinear: sites sorted along
    their common line, queried by bisection plus a unimodal walk.
``line``
    one-dimensional sites, same walk over the sorted coordinates.
``scan``
    a handful of planar sites, checked one by one.
``planar``
    Delaunay triangulation. A query starts at the best of a small sample of
    sites and descends greedily along Delaunay edges; in a Delaunay
    triangulation a site with no strictly closer neighbour is a nearest site.
    Sites tied at that distance lie on an empty circle and are joined by
    Delaunay edges, so they are collected by a flood over equal distances.
"""

from bisect import bisect_left

from .delaunay import DelaunayTriangulation
from .errors import UsageError
from .geometry import Neighbor, squared_distance
from .predicates import compare_distance, orientation

# Planar site sets up to this size are scanned instead of triangulated.
SCAN_THRESHOLD = 12


class StaticNNIndex:
    __slots__ = ("kind", "sites", "_pts", "_ids", "_proj", "_origin", "_dir",
                 "_nbrs", "_starts", "dt")

    def __init__(self, kind, sites):
        self.kind = kind
        self.sites = sites
        self.dt = None

    def __len__(self):
        return len(self.sites)

    def nearest(self, query):
        """(id, squared distance) of the site closest to ``query``."""
        if len(query) != len(self._pts[0]):
            raise UsageError("query dimension does not match the index")
        if self.kind == "planar":
            v = self._nearest_planar(query)
        elif self.kind == "scan":
            v = self._nearest_scan(query)
        else:
            v = self._nearest_path(query)
        return Neighbor(self._ids[v], squared_distance(query, self._pts[v]))

    def _nearest_scan(self, q):
        pts, ids = self._pts, self._ids
        best = 0
        for v in range(1, len(pts)):
            s = compare_distance(q, pts[v], pts[best])
            if s < 0 or (s == 0 and ids[v] < ids[best]):
                best = v
        return best

    def _nearest_path(self, q):
        pts, ids = self._pts, self._ids
        m = len(pts)
        if m == 1:
            return 0
        if self._dir is None:
            t = q[0]
        else:
            t = (q[0] - self._origin[0]) * self._dir[0] + (q[1] - self._origin[1]) * self._dir[1]
        i = min(bisect_left(self._proj, t), m - 1)
        # Distance along the sorted sites is unimodal; walk downhill.
        moved = False
        while i > 0 and compare_distance(q, pts[i - 1], pts[i]) < 0:
            i -= 1
            moved = True
        if not moved:
            while i + 1 < m and compare_distance(q, pts[i + 1], pts[i]) < 0:
                i += 1
        best = i
        for j in (i - 1, i + 1):
            if 0 <= j < m and ids[j] < ids[best] and compare_distance(q, pts[j], pts[i]) == 0:
                best = j
        return best

    def _nearest_planar(self, q):
        pts, nbrs = self._pts, self._nbrs
        cur = self._starts[0]
        for v in self._starts[1:]:
            if compare_distance(q, pts[v], pts[cur]) < 0:
                cur = v
        while True:
            nxt = cur
            for u in nbrs[cur]:
                if compare_distance(q, pts[u], pts[nxt]) < 0:
                    nxt = u
            if nxt == cur:
                break
            cur = nxt
        ids = self._ids
        best = cur
        stack = [cur]
        seen = {cur}
        while stack:
            v = stack.pop()
            for u in nbrs[v]:
                if u not in seen and compare_distance(q, pts[u], pts[cur]) == 0:
                    seen.add(u)
                    stack.append(u)
                    if ids[u] < ids[best]:
                        best = u
        return best


def _dedupe(sites):
    """Distinct locations, each represented by its smallest id."""
    rep = {}
    for p, ident in sites:
        old = rep.get(p)
        if old is None or ident < old:
            rep[p] = ident
    return rep


def _path_index(kind, sites, rep):
    idx = StaticNNIndex(kind, sites)
    order = sorted(rep)
    idx._pts = order
    idx._ids = [rep[p] for p in order]
    if len(order[0]) == 1:
        idx._dir = None
        idx._proj = [p[0] for p in order]
    else:
        o = order[0]
        e = order[-1]
        d = (e[0] - o[0], e[1] - o[1])
        idx._origin = o
        idx._dir = d
        idx._proj = [(p[0] - o[0]) * d[0] + (p[1] - o[1]) * d[1] for p in order]
    return idx


def build_static_nn(sites, scan_threshold=SCAN_THRESHOLD, seed=0):
    """Build an index over ``sites``, a sequence of ``(point, id)`` pairs.

    Points are tuples of one or two floats; ids must be distinct.
    """
    sites = [(tuple(p), ident) for p, ident in sites]
    if not sites:
        raise UsageError("cannot index an empty site set")
    dim = len(sites[0][0])
    if dim not in (1, 2) or any(len(p) != dim for p, _ in sites):
        raise UsageError("sites must all be 1-D or all be 2-D")
    if len({ident for _, ident in sites}) != len(sites):
        raise UsageError("site ids must be distinct")

    rep = _dedupe(sites)
    if dim == 1:
        return _path_index("line", sites, rep)
    if len(rep) <= 2:
        return _path_index("degenerate", sites, rep)
    if len(rep) <= scan_threshold:
        idx = StaticNNIndex("scan", sites)
        idx._pts = list(rep)
        idx._ids = [rep[p] for p in idx._pts]
        return idx

    pts = list(rep)
    ids = [rep[p] for p in pts]
    dt = DelaunayTriangulation.build(pts, ids, seed=seed)
    if dt is None:
        return _path_index("degenerate", sites, rep)
    idx = StaticNNIndex("planar", sites)
    idx.dt = dt
    idx._pts = pts
    idx._ids = ids
    idx._nbrs = dt.neighbors()
    # The head of the insertion order is a uniform random sample.
    k = max(1, round(len(pts) ** (1 / 3)))
    idx._starts = dt.insertion_order[:k]
    return idx


def is_collinear(points):
    """True when every point lies on one line (or there are fewer than 3 distinct)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return True
    a, b = pts[0], pts[-1]
    return all(orientation(a, b, p) == 0 for p in pts)


def nearest_site(idx, query):
    return idx.nearest(query)
