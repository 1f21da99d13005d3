"""Quadratic reference implementations.

These are the baselines every indexed algorithm is checked against, so they
are kept as plain as possible: filter, then take the minimum under the
global order (exact squared distance, then smaller index).
"""

from operator import gt

from .errors import UsageError
from .geometry import Neighbor, closer, rect_contains, squared_distance


def brute_nearest_dominator(ds, counters=None):
    """Nearest strict dominator of every point, by checking all pairs."""
    P, Q = ds.P, ds.Q
    n = len(P)
    out = []
    for i in range(n):
        pi, qi = P[i], Q[i]
        best = -1
        for j in range(n):
            if all(map(gt, Q[j], qi)):
                if best < 0 or closer(pi, P[j], j, P[best], best):
                    best = j
        out.append(None if best < 0 else Neighbor(best, squared_distance(pi, P[best])))
    if counters is not None:
        counters.node_visits += n * n
    return out


def brute_rect_query(ds, p, r):
    """Point of ``ds`` nearest to ``p`` among those whose features lie in ``r``."""
    if len(p) != ds.d_real or r.dim != ds.d_feat:
        raise UsageError("query dimensions do not match the dataset")
    best = -1
    for j, (pj, qj) in enumerate(zip(ds.P, ds.Q)):
        if rect_contains(r, qj) and (best < 0 or closer(p, pj, j, ds.P[best], best)):
            best = j
    return None if best < 0 else Neighbor(best, squared_distance(p, ds.P[best]))


def brute_nn(sites, query):
    """Linear-scan nearest site; ``sites`` is a sequence of ``(point, id)``."""
    best = None
    for p, ident in sites:
        if best is None or closer(query, p, ident, best[0], best[1]):
            best = (p, ident)
    if best is None:
        raise UsageError("no sites to search")
    return Neighbor(best[1], squared_distance(query, best[0]))
