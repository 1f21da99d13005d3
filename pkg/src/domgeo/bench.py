"""Scaling benchmark: wall time and work counters per (algorithm, n, seed)."""

import csv
import time
from dataclasses import asdict, dataclass

from .engine import ALGORITHMS, Counters, check_algorithm
from .io import gen_dataset

# Dimensions used when the caller does not pin them.
NATURAL_DIMS = {
    "brute": (1, 2),
    "sweep": (1, 2),
    "rangetree": (2, 2),
    "offline": (2, 2),
}

FIELDS = ("algorithm", "n", "d_real", "d_feat", "seed", "wall_ns",
          "node_visits", "indexes_built", "indexed_points")


@dataclass
class BenchRecord:
    algorithm: str
    n: int
    d_real: int
    d_feat: int
    seed: int
    wall_ns: int
    node_visits: int
    indexes_built: int
    indexed_points: int


def run_one(algo, n, seed, d_real=None, d_feat=None, distribution="uniform", repeats=1):
    """Time one algorithm on one generated dataset; keeps the fastest of ``repeats``."""
    nat_real, nat_feat = NATURAL_DIMS[algo]
    d_real = nat_real if d_real is None else d_real
    d_feat = nat_feat if d_feat is None else d_feat
    check_algorithm(algo, d_real, d_feat)
    ds = gen_dataset(n, d_real, d_feat, seed, distribution)
    fn = ALGORITHMS[algo]
    best = None
    for _ in range(max(1, repeats)):
        counters = Counters()
        t0 = time.perf_counter_ns()
        fn(ds, counters)
        elapsed = time.perf_counter_ns() - t0
        best = elapsed if best is None else min(best, elapsed)
    return BenchRecord(algo, n, d_real, d_feat, seed, best,
                       counters.node_visits, counters.indexes_built, counters.indexed_points)


def run_bench(algos, sizes, seeds, d_real=None, d_feat=None, distribution="uniform", repeats=1):
    for algo in algos:
        nat_real, nat_feat = NATURAL_DIMS.get(algo, (None, None))
        check_algorithm(algo, d_real or nat_real, d_feat or nat_feat)
    records = []
    for algo in algos:
        for n in sizes:
            for seed in seeds:
                records.append(run_one(algo, n, seed, d_real, d_feat, distribution, repeats))
    return records


def write_csv(records, fh):
    writer = csv.DictWriter(fh, fieldnames=FIELDS)
    writer.writeheader()
    for r in records:
        writer.writerow(asdict(r))
