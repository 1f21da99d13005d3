"""Points, distances, dominance and query rectangles.

Real-space and feature-space points are plain tuples of floats. A point's
index in its :class:`Dataset` is its identity everywhere in the library.
"""

from dataclasses import dataclass
from math import inf, isfinite
from typing import NamedTuple, Optional, Sequence, Tuple

from .errors import UsageError
from .predicates import compare_distance, in_circle, orientation  # noqa: F401

Point = Tuple[float, ...]


def _check_dims(a, b):
    if len(a) != len(b):
        raise UsageError(f"dimension mismatch: {len(a)} vs {len(b)}")


def squared_distance(a: Sequence[float], b: Sequence[float]) -> float:
    _check_dims(a, b)
    s = 0.0
    for x, y in zip(a, b):
        t = x - y
        s += t * t
    return s


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff ``a`` is strictly greater than ``b`` in every coordinate."""
    _check_dims(a, b)
    return all(x > y for x, y in zip(a, b))


class Neighbor(NamedTuple):
    """A nearest-point answer: the point's index and its squared distance."""

    index: int
    sqdist: float


def closer(query, a_point, a_index, b_point, b_index) -> bool:
    """Is candidate a strictly better than b for ``query``?

    Candidates are ordered by exact squared distance, then by smaller index.
    """
    s = compare_distance(query, a_point, b_point)
    if s:
        return s < 0
    return a_index < b_index


@dataclass(frozen=True)
class QueryRect:
    """Axis-parallel box with per-bound inclusivity.

    Infinite bounds are always exclusive; ``contains`` ignores their flags.
    """

    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    lower_closed: Tuple[bool, ...]
    upper_closed: Tuple[bool, ...]

    def __post_init__(self):
        d = len(self.lower)
        if not (len(self.upper) == len(self.lower_closed) == len(self.upper_closed) == d):
            raise UsageError("rectangle bound sequences differ in length")
        for k in range(d):
            lo, hi = self.lower[k], self.upper[k]
            if lo != lo or hi != hi or lo == inf or hi == -inf:
                raise UsageError(f"invalid bounds in dimension {k}: ({lo}, {hi})")
            if (lo == -inf and self.lower_closed[k]) or (hi == inf and self.upper_closed[k]):
                raise UsageError(f"infinite bound marked inclusive in dimension {k}")
            if lo > hi or (lo == hi and not (self.lower_closed[k] and self.upper_closed[k])):
                raise UsageError(f"empty interval in dimension {k}: ({lo}, {hi})")

    @property
    def dim(self):
        return len(self.lower)

    @classmethod
    def full(cls, d):
        return cls((-inf,) * d, (inf,) * d, (False,) * d, (False,) * d)

    @classmethod
    def upper_quadrant(cls, corner):
        """Open orthant of points strictly dominating ``corner``."""
        d = len(corner)
        return cls(tuple(corner), (inf,) * d, (False,) * d, (False,) * d)

    @classmethod
    def closed(cls, lower, upper):
        """Box with every finite bound inclusive."""
        return cls(tuple(lower), tuple(upper),
                   tuple(isfinite(v) for v in lower), tuple(isfinite(v) for v in upper))

    def contains(self, q):
        return rect_contains(self, q)


def rect_contains(r: QueryRect, q: Sequence[float]) -> bool:
    if r.dim != len(q):
        raise UsageError(f"dimension mismatch: rectangle {r.dim} vs point {len(q)}")
    for v, lo, hi, lc, hc in zip(q, r.lower, r.upper, r.lower_closed, r.upper_closed):
        if v < lo or (v == lo and not lc):
            return False
        if v > hi or (v == hi and not hc):
            return False
    return True


@dataclass(frozen=True)
class Dataset:
    """Paired real-space locations ``P`` and feature-space ratings ``Q``."""

    P: Tuple[Point, ...]
    Q: Tuple[Point, ...]
    d_real: int
    d_feat: int

    def __post_init__(self):
        if len(self.P) != len(self.Q):
            raise UsageError(f"|P| = {len(self.P)} but |Q| = {len(self.Q)}")
        if self.d_real < 1 or self.d_feat < 1:
            raise UsageError("dimensions must be positive")
        for i, (p, q) in enumerate(zip(self.P, self.Q)):
            if len(p) != self.d_real or len(q) != self.d_feat:
                raise UsageError(f"point {i} has wrong dimension")
            if not all(isfinite(v) for v in p) or not all(isfinite(v) for v in q):
                raise UsageError(f"point {i} has a non-finite coordinate")

    @classmethod
    def from_points(cls, P, Q, d_real=None, d_feat=None):
        P = tuple(tuple(float(v) for v in p) for p in P)
        Q = tuple(tuple(float(v) for v in q) for q in Q)
        if d_real is None:
            d_real = len(P[0]) if P else 1
        if d_feat is None:
            d_feat = len(Q[0]) if Q else 1
        return cls(P, Q, d_real, d_feat)

    @property
    def n(self):
        return len(self.P)

    def __len__(self):
        return len(self.P)


DominatorResult = Sequence[Optional[Neighbor]]
