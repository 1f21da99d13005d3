"""Dataset text format, result format and the deterministic generator.

Dataset files start with a header ``n d_real d_feat`` followed by ``n`` rows
of ``d_real`` location coordinates then ``d_feat`` ratings. Blank lines and
lines starting with ``#`` are skipped.
"""

import random
from math import isfinite

from .errors import ParseError, UsageError
from .geometry import Dataset

DISTRIBUTIONS = ("uniform", "correlated", "antichain")


def _floats(tokens, lineno):
    out = []
    for tok in tokens:
        try:
            v = float(tok)
        except ValueError:
            raise ParseError(lineno, f"not a number: {tok!r}") from None
        if not isfinite(v):
            raise ParseError(lineno, f"non-finite value: {tok!r}")
        out.append(v)
    return out


def parse_dataset(text):
    header = None
    P, Q = [], []
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tokens = s.split()
        if header is None:
            if len(tokens) != 3:
                raise ParseError(lineno, "header must be 'n d_real d_feat'")
            try:
                header = tuple(int(t) for t in tokens)
            except ValueError:
                raise ParseError(lineno, "header values must be integers") from None
            n, d_real, d_feat = header
            if n < 0 or d_real < 1 or d_feat < 1:
                raise ParseError(lineno, "header needs n >= 0 and positive dimensions")
            continue
        if len(P) == n:
            raise ParseError(lineno, f"more than {n} data rows")
        if len(tokens) != d_real + d_feat:
            raise ParseError(lineno, f"expected {d_real + d_feat} values, found {len(tokens)}")
        vals = _floats(tokens, lineno)
        P.append(tuple(vals[:d_real]))
        Q.append(tuple(vals[d_real:]))
    if header is None:
        raise ParseError(max(lineno, 1), "missing header")
    if len(P) != n:
        raise ParseError(max(lineno, 1), f"expected {n} data rows, found {len(P)}")
    return Dataset(tuple(P), tuple(Q), d_real, d_feat)


def format_dataset(ds):
    lines = [f"{ds.n} {ds.d_real} {ds.d_feat}"]
    for p, q in zip(ds.P, ds.Q):
        lines.append(" ".join(repr(v) for v in p + q))
    return "\n".join(lines) + "\n"


def format_results(results):
    """One line per point: ``i j sqdist`` or ``i - -``; 17 significant digits."""
    lines = []
    for i, r in enumerate(results):
        if r is None:
            lines.append(f"{i} - -")
        else:
            j, sqdist = r
            lines.append(f"{i} {j} {sqdist:.17g}")
    return "\n".join(lines) + ("\n" if lines else "")


def gen_dataset(n, d_real, d_feat, seed, distribution="uniform"):
    """Deterministic random dataset from Python's seeded Mersenne Twister.

    ``uniform``: locations and ratings independent in [0, 1].
    ``correlated``: each rating is a location coordinate plus N(0, 0.1) noise.
    ``antichain``: first two ratings are (t, 1 - t), so nothing dominates
    anything (with one rating, all ratings are equal).
    """
    if n < 1:
        raise UsageError("n must be at least 1")
    if d_real < 1 or d_feat < 1:
        raise UsageError("dimensions must be positive")
    if distribution not in DISTRIBUTIONS:
        raise UsageError(f"unknown distribution {distribution!r}")
    rng = random.Random(seed)
    P = [tuple(rng.random() for _ in range(d_real)) for _ in range(n)]
    if distribution == "uniform":
        Q = [tuple(rng.random() for _ in range(d_feat)) for _ in range(n)]
    elif distribution == "correlated":
        Q = [tuple(p[k % d_real] + rng.gauss(0.0, 0.1) for k in range(d_feat)) for p in P]
    else:
        Q = []
        for _ in range(n):
            if d_feat == 1:
                Q.append((0.5,))
                continue
            t = rng.random()
            Q.append((t, 1.0 - t) + tuple(rng.random() for _ in range(d_feat - 2)))
    return Dataset(tuple(P), tuple(Q), d_real, d_feat)
