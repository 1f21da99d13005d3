"""Incremental Delaunay triangulation in the plane.

Bowyer-Watson insertion over a triangulation closed off by *ghost* triangles:
every convex-hull edge (u, v) is paired with a triangle (u, v, GHOST) whose
"circumcircle" is the open half-plane beyond the edge plus the open edge
itself. Cocircular ties are broken by lifting each site by an infinitesimal
amount ordered by its id (see ``in_circle_perturbed``), so the result is a
unique Delaunay triangulation of the input even on grids.

Sites are inserted in a biased randomized order whose rounds are sorted
along a Hilbert curve, and each new site is located by a visibility walk
from the previous insertion.
"""

import random

from .predicates import in_circle_perturbed, orientation

GHOST = -1


def _hilbert_index(order, x, y):
    n = 1 << order
    d = 0
    s = n >> 1
    while s:
        rx = 1 if x & s else 0
        ry = 1 if y & s else 0
        d += s * s * ((3 * rx) ^ ry)
        if not ry:
            if rx:
                x = n - 1 - x
                y = n - 1 - y
            x, y = y, x
        s >>= 1
    return d


def brio_order(points, seed, order=10):
    """Biased randomized insertion order: shuffled rounds of doubling size,
    each round sorted along a Hilbert curve over the bounding box."""
    m = len(points)
    idx = list(range(m))
    random.Random(seed).shuffle(idx)
    if m < 3:
        return idx
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0)
    cells = (1 << order) - 1
    scale = cells / span if span > 0 else 0.0

    def key(i):
        p = points[i]
        gx = min(cells, int((p[0] - x0) * scale))
        gy = min(cells, int((p[1] - y0) * scale))
        return _hilbert_index(order, gx, gy)

    out = []
    hi = m
    bounds = []
    while hi > 16:
        bounds.append(hi)
        hi //= 2
    bounds.append(hi)
    lo = 0
    for b in reversed(bounds):
        out.extend(sorted(idx[lo:b], key=key))
        lo = b
    return out


class DelaunayTriangulation:
    """Delaunay triangulation of distinct planar points.

    ``points[v]`` and ``ranks[v]`` describe vertex ``v``; ranks (the site ids)
    order the symbolic perturbation and must be distinct. Use :meth:`build`,
    which returns None when the points are all collinear.

    Triangles are vertex-index triples in counter-clockwise order; ``nbr[t][k]``
    is the triangle across the edge opposite ``tri[t][k]``.
    """

    def __init__(self, points, ranks):
        self.points = points
        self.ranks = ranks
        self.tri = []
        self.nbr = []
        self.alive = []
        self._free = []
        self._stamp = []
        self._tick = 0
        self._last = 0
        self.insertion_order = []
        self.walk_steps = 0

    @classmethod
    def build(cls, points, ranks, seed=0):
        dt = cls(points, ranks)
        order = brio_order(points, seed)
        a = order[0]
        b = order[1] if len(order) > 1 else None
        c = None
        if b is not None:
            pa, pb = points[a], points[b]
            for v in order[2:]:
                if orientation(pa, pb, points[v]) != 0:
                    c = v
                    break
        if c is None:
            return None
        dt._init_triangle(a, b, c)
        dt.insertion_order = [a, b, c]
        for v in order[2:]:
            if v != c:
                dt.insert(v)
                dt.insertion_order.append(v)
        return dt

    # -- construction --------------------------------------------------------

    def _new(self, a, b, c):
        if self._free:
            t = self._free.pop()
            self.tri[t] = [a, b, c]
            self.nbr[t] = [-1, -1, -1]
            self.alive[t] = True
        else:
            t = len(self.tri)
            self.tri.append([a, b, c])
            self.nbr.append([-1, -1, -1])
            self.alive.append(True)
            self._stamp.append(0)
        return t

    def _init_triangle(self, a, b, c):
        pts = self.points
        if orientation(pts[a], pts[b], pts[c]) < 0:
            b, c = c, b
        ts = [self._new(a, b, c), self._new(b, a, GHOST),
              self._new(c, b, GHOST), self._new(a, c, GHOST)]
        edges = {}
        for t in ts:
            v = self.tri[t]
            for k in range(3):
                edges[v[(k + 1) % 3], v[(k + 2) % 3]] = (t, k)
        for (u, w), (t, k) in edges.items():
            self.nbr[t][k] = edges[w, u][0]
        self._last = ts[0]

    def _ghost_edge(self, t):
        a, b, c = self.tri[t]
        if c == GHOST:
            return a, b
        if a == GHOST:
            return b, c
        if b == GHOST:
            return c, a
        return None

    def _in_conflict(self, t, p, rank):
        pts = self.points
        edge = self._ghost_edge(t)
        if edge is None:
            a, b, c = self.tri[t]
            ranks = self.ranks
            return in_circle_perturbed(pts[a], pts[b], pts[c], p,
                                       (ranks[a], ranks[b], ranks[c], rank)) > 0
        pu, pv = pts[edge[0]], pts[edge[1]]
        o = orientation(pu, pv, p)
        if o:
            return o > 0
        # Collinear with the hull edge: conflict only on the open segment.
        return min(pu, pv) < p < max(pu, pv)

    def locate(self, p, start=None):
        """Visibility walk to a triangle containing p, or a ghost triangle
        whose half-plane contains p when p is outside the hull."""
        pts = self.points
        tri = self.tri
        nbr = self.nbr
        t = self._last if start is None else start
        if self._ghost_edge(t) is not None:
            t = nbr[t][tri[t].index(GHOST)]
        steps = 0
        rot = 0
        while True:
            steps += 1
            v = tri[t]
            if GHOST in v:
                break
            moved = False
            rot = (rot + 1) % 3
            for j in range(3):
                k = (rot + j) % 3
                if orientation(pts[v[(k + 1) % 3]], pts[v[(k + 2) % 3]], p) < 0:
                    t = nbr[t][k]
                    moved = True
                    break
            if not moved:
                break
        self.walk_steps += steps
        return t

    def insert(self, v):
        p = self.points[v]
        rank = self.ranks[v]
        t0 = self.locate(p)
        tri = self.tri
        nbr = self.nbr
        stamp = self._stamp
        self._tick += 2
        in_tick, out_tick = self._tick, self._tick + 1

        cavity = [t0]
        stamp[t0] = in_tick
        boundary = []  # (a, b, outside triangle)
        i = 0
        while i < len(cavity):
            t = cavity[i]
            i += 1
            vt = tri[t]
            for k in range(3):
                u = nbr[t][k]
                s = stamp[u]
                if s == in_tick:
                    continue
                if s != out_tick:
                    if self._in_conflict(u, p, rank):
                        stamp[u] = in_tick
                        cavity.append(u)
                        continue
                    stamp[u] = out_tick
                boundary.append((vt[(k + 1) % 3], vt[(k + 2) % 3], u))
        self._tick += 1

        for t in cavity:
            self.alive[t] = False
            self._free.append(t)

        by_start = {}
        by_end = {}
        created = []
        for a, b, outside in boundary:
            t = self._new(a, b, v)
            created.append(t)
            nbr[t][2] = outside
            no = nbr[outside]
            vo = tri[outside]
            # The outside triangle sees edge (b, a); point it at t.
            for k in range(3):
                if vo[(k + 1) % 3] == b and vo[(k + 2) % 3] == a:
                    no[k] = t
                    break
            by_start[a] = t
            by_end[b] = t
        for t in created:
            a, b, _ = tri[t]
            nbr[t][0] = by_start[b]  # edge (b, v)
            nbr[t][1] = by_end[a]    # edge (v, a)
        for t in created:
            if GHOST not in tri[t]:
                self._last = t
                break

    # -- queries -----------------------------------------------------------

    def triangles(self):
        """Finite triangles as CCW vertex-index triples."""
        return [tuple(v) for t, v in enumerate(self.tri)
                if self.alive[t] and GHOST not in v]

    def ghost_triangles(self):
        return [tuple(v) for t, v in enumerate(self.tri)
                if self.alive[t] and GHOST in v]

    def hull_size(self):
        return len(self.ghost_triangles())

    def neighbors(self):
        """Per-vertex sorted list of adjacent vertices (Delaunay edges)."""
        adj = [set() for _ in self.points]
        for a, b, c in self.triangles():
            adj[a].update((b, c))
            adj[b].update((a, c))
            adj[c].update((a, b))
        return [sorted(s) for s in adj]
