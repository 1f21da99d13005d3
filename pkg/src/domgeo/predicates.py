"""Exact-sign geometric predicates.

Each predicate first evaluates its determinant in floating point and accepts
the sign when it clears Shewchuk's forward error bound. Otherwise the same
polynomial is re-evaluated exactly: every double is a dyadic rational, so
scaling all inputs by the largest denominator turns the computation into
Python integer arithmetic with no rounding at all.
"""

from math import isfinite

_EPS = 2.0 ** -53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS
# Below this magnitude intermediate products may underflow and the
# relative error bounds stop holding.
_TINY = 2.0 ** -900


def _sign(v):
    return (v > 0) - (v < 0)


def _as_ints(values):
    """Scale a batch of doubles to integers by a shared power of two."""
    ratios = [v.as_integer_ratio() for v in values]
    den = max(d for _, d in ratios)
    return [n * (den // d) for n, d in ratios]


def orientation(a, b, c):
    """Sign of twice the signed area of triangle (a, b, c).

    +1 for counter-clockwise, -1 for clockwise, 0 for collinear.
    """
    detleft = (a[0] - c[0]) * (b[1] - c[1])
    detright = (a[1] - c[1]) * (b[0] - c[0])
    det = detleft - detright
    detsum = abs(detleft) + abs(detright)
    if isfinite(det) and detsum > _TINY and abs(det) > _CCW_BOUND * detsum:
        return 1 if det > 0 else -1
    return orientation_exact(a, b, c)


def orientation_exact(a, b, c):
    ax, ay, bx, by, cx, cy = _as_ints((a[0], a[1], b[0], b[1], c[0], c[1]))
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def in_circle(a, b, c, d):
    """+1 if d lies strictly inside the circle through a, b, c (given CCW),
    -1 if strictly outside, 0 if the four points are cocircular."""
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (alift * (bdxcdy - cdxbdy)
           + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    if isfinite(det) and permanent > _TINY and abs(det) > _ICC_BOUND * permanent:
        return 1 if det > 0 else -1
    return in_circle_exact(a, b, c, d)


def in_circle_exact(a, b, c, d):
    ax, ay, bx, by, cx, cy, dx, dy = _as_ints(
        (a[0], a[1], b[0], b[1], c[0], c[1], d[0], d[1]))
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
           + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
           + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
    return _sign(det)


def in_circle_perturbed(a, b, c, d, ranks):
    """in_circle with cocircular ties broken by symbolic perturbation.

    Every point's lifted coordinate x^2 + y^2 is raised by eps**(rank + 1),
    so the point with the smallest rank dominates. The determinant is linear
    in the lifts, and the coefficient of each point's lift is the orientation
    of the other three (negated for d), so the perturbed sign is the sign of
    the first non-zero coefficient in rank order. Never returns 0 when
    (a, b, c) is strictly counter-clockwise.

    ``ranks`` holds the perturbation ranks of (a, b, c, d); they must be distinct.
    """
    s = in_circle(a, b, c, d)
    if s:
        return s
    coeffs = (
        lambda: orientation(d, b, c),
        lambda: orientation(a, d, c),
        lambda: orientation(a, b, d),
        lambda: -orientation(a, b, c),
    )
    for k in sorted(range(4), key=ranks.__getitem__):
        s = coeffs[k]()
        if s:
            return s
    return 0


def compare_distance(q, a, b):
    """Sign of |q - a|^2 - |q - b|^2, exact, for points of any dimension."""
    da = 0.0
    db = 0.0
    for qk, ak, bk in zip(q, a, b):
        t = qk - ak
        da += t * t
        t = qk - bk
        db += t * t
    diff = da - db
    total = da + db
    # Each sum carries relative error below (dim + 2) * eps.
    if isfinite(total) and total > _TINY and abs(diff) > (len(q) + 3) * 2.0 * _EPS * total:
        return 1 if diff > 0 else -1
    return compare_distance_exact(q, a, b)


def compare_distance_exact(q, a, b):
    dim = len(q)
    ints = _as_ints(tuple(q) + tuple(a) + tuple(b))
    qi, ai, bi = ints[:dim], ints[dim:2 * dim], ints[2 * dim:]
    da = sum((x - y) * (x - y) for x, y in zip(qi, ai))
    db = sum((x - y) * (x - y) for x, y in zip(qi, bi))
    return _sign(da - db)
