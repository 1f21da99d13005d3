"""Independent oracles shared by the test modules.

Everything here uses numpy or exact rationals and none of the library's
predicates, so it can check the library without sharing its failure modes.
"""

from fractions import Fraction

import numpy as np

from domgeo.geometry import Dataset

_ICC_BOUND = 2 * (10.0 + 96.0 * 2.0 ** -53) * 2.0 ** -53


def random_dataset(rng, n, d_real, d_feat, dup_rate=0.3, levels=6):
    """Uniform coordinates with a share of small-integer duplicates mixed in."""

    def coord():
        if rng.random() < dup_rate:
            return float(rng.randint(0, levels))
        return rng.uniform(0, levels)

    P = [tuple(coord() for _ in range(d_real)) for _ in range(n)]
    Q = [tuple(coord() for _ in range(d_feat)) for _ in range(n)]
    return Dataset.from_points(P, Q, d_real, d_feat)


def exact_sqdist(a, b):
    return sum((Fraction(x) - Fraction(y)) ** 2 for x, y in zip(a, b))


def exact_argmin(query, sites):
    """Tie-aware argmin over ``(point, id)`` pairs with rational arithmetic."""
    return min(sites, key=lambda s: (exact_sqdist(query, s[0]), s[1]))[1]


def exact_incircle(a, b, c, d):
    a, b, c, d = [tuple(map(Fraction, p)) for p in (a, b, c, d)]
    rows = [(p[0] - d[0], p[1] - d[1]) for p in (a, b, c)]
    (ax, ay), (bx, by), (cx, cy) = rows
    det = ((ax * ax + ay * ay) * (bx * cy - cx * by)
           + (bx * bx + by * by) * (cx * ay - ax * cy)
           + (cx * cx + cy * cy) * (ax * by - bx * ay))
    return (det > 0) - (det < 0)


def circumcircle_violations(points, triangles, chunk=256):
    """(triangle, site) pairs with the site strictly inside the circumcircle.

    Every pair is examined: numpy evaluates all determinants, and pairs too
    close to zero to trust are re-decided with exact rationals.
    """
    pts = np.asarray(points, dtype=float)
    tris = np.asarray(triangles, dtype=int).reshape(-1, 3)
    bad = []
    for start in range(0, len(tris), chunk):
        t = tris[start:start + chunk]
        A, B, C = (pts[t[:, k]][:, None, :] for k in range(3))
        D = pts[None, :, :]
        adx, ady = A[..., 0] - D[..., 0], A[..., 1] - D[..., 1]
        bdx, bdy = B[..., 0] - D[..., 0], B[..., 1] - D[..., 1]
        cdx, cdy = C[..., 0] - D[..., 0], C[..., 1] - D[..., 1]
        alift = adx * adx + ady * ady
        blift = bdx * bdx + bdy * bdy
        clift = cdx * cdx + cdy * cdy
        det = (alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy)
               + clift * (adx * bdy - bdx * ady))
        perm = ((np.abs(bdx * cdy) + np.abs(cdx * bdy)) * alift
                + (np.abs(cdx * ady) + np.abs(adx * cdy)) * blift
                + (np.abs(adx * bdy) + np.abs(bdx * ady)) * clift)
        bound = _ICC_BOUND * perm
        sure = det > bound
        unsure = np.abs(det) <= bound
        for ti, v in zip(*np.nonzero(sure)):
            bad.append((start + ti, v))
        for ti, v in zip(*np.nonzero(unsure)):
            a, b, c = (tuple(pts[k]) for k in t[ti])
            if exact_incircle(a, b, c, tuple(pts[v])) > 0:
                bad.append((start + ti, v))
    return bad


def scan_nearest(sites, queries, chunk=512):
    """Linear-scan nearest site id for every query (ties to smaller id)."""
    pts = np.asarray([p for p, _ in sites], dtype=float)
    ids = [i for _, i in sites]
    out = []
    for start in range(0, len(queries), chunk):
        q = np.asarray(queries[start:start + chunk], dtype=float)
        d = ((q[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
        m = d.min(axis=1)
        for row, qq in enumerate(q):
            near = np.nonzero(d[row] <= m[row] * (1 + 1e-9) + 1e-300)[0]
            qt = tuple(queries[start + row])
            out.append(exact_argmin(qt, [(sites[k][0], ids[k]) for k in near]))
    return out
