"""Command line entry point: ``domgeo {solve,gen,bench}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 I/O or parse error.
"""

import argparse
import logging
import os
import sys

from .bench import run_bench, write_csv
from .engine import ALGORITHMS, check_algorithm
from .errors import ParseError, UsageError
from .io import DISTRIBUTIONS, format_dataset, format_results, gen_dataset, parse_dataset
from .oracle import brute_nearest_dominator

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

log = logging.getLogger("domgeo")


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _name_list(text):
    return [v.strip() for v in text.split(",") if v.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="domgeo",
        description="Nearest strictly-dominating point for every point of a dataset.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="compute nearest dominators for a dataset file")
    solve.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    solve.add_argument("--input", required=True, help="dataset file, '-' for stdin")
    solve.add_argument("--output", help="result file (default stdout)")
    solve.add_argument("--verify", action="store_true",
                       help="also run the brute-force oracle; exit 1 on any mismatch")

    gen = sub.add_parser("gen", help="write a generated dataset file")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d-real", type=int, default=2)
    gen.add_argument("--d-feat", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    gen.add_argument("--output", help="dataset file (default stdout)")

    bench = sub.add_parser(
        "bench", help="time algorithms on generated data and write CSV",
        description="The range tree stores about n*(log2 n + 1)^d_feat points across "
                    "its indexes; memory grows accordingly.")
    bench.add_argument("--algos", type=_name_list, required=True)
    bench.add_argument("--sizes", type=_int_list, required=True)
    bench.add_argument("--seeds", type=_int_list, default=[0])
    bench.add_argument("--csv", required=True, help="output CSV file, '-' for stdout")
    bench.add_argument("--d-real", type=int)
    bench.add_argument("--d-feat", type=int)
    bench.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    bench.add_argument("--repeats", type=int, default=1,
                       help="runs per configuration; the fastest is reported")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def run_solve(args):
    ds = parse_dataset(_read(args.input))
    check_algorithm(args.algo, ds.d_real, ds.d_feat)
    results = ALGORITHMS[args.algo](ds)
    _write(args.output, format_results(results))
    if args.verify:
        expected = brute_nearest_dominator(ds)
        bad = [i for i, (a, b) in enumerate(zip(results, expected)) if a != b]
        if bad:
            log.error("%d of %d points differ from the oracle (first: %d)", len(bad), ds.n, bad[0])
            return EXIT_MISMATCH
        log.info("verified %d points against the oracle", ds.n)
    return EXIT_OK


def run_gen(args):
    ds = gen_dataset(args.n, args.d_real, args.d_feat, args.seed, args.dist)
    _write(args.output, format_dataset(ds))
    return EXIT_OK


def run_bench_cmd(args):
    records = run_bench(args.algos, args.sizes, args.seeds, args.d_real, args.d_feat,
                        args.dist, args.repeats)
    if args.csv == "-":
        write_csv(records, sys.stdout)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            write_csv(records, fh)
    return EXIT_OK


COMMANDS = {"solve": run_solve, "gen": run_gen, "bench": run_bench_cmd}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    threads = os.environ.get("DOMGEO_THREADS", "1")
    if threads != "1":
        log.error("DOMGEO_THREADS must be 1 (got %r)", threads)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except ParseError as exc:
        log.error("%s", exc)
        return EXIT_IO
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
