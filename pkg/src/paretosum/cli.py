"""Command-line interface: ``paretosum {gen,exact,approx,eval,bench}``.

Exit codes: 0 success, 1 runtime failure (bad file, budget exceeded, ...),
2 usage error (unknown flag value, invalid combination).
"""

from __future__ import annotations

import argparse
import sys
import time

from .approx import approximate_pareto_sum, evaluate_quality, weak_approximate_pareto_sum
from .bench import append_csv, file_instances, generated_instances, run_bench
from .core import as_pareto_set
from .dispatch import ALGORITHMS, WITNESSED, pareto_sum
from .errors import ConfigError, ParetoSumError, RangeTooSmall
from .generators import GenSpec, Kind, generate, read_instance, read_result, write_instance, write_result
from .minplus import CdxzConfig


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def _add_backend_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cdxz-scale", type=int, default=25, help="scaling factor of conv-cdxz (default 25)")
    p.add_argument("--cdxz-prime", type=int, default=2, help="residue prime of conv-cdxz (default 2)")
    p.add_argument(
        "--cdxz-theoretical",
        action="store_true",
        help="use scale=ceil(n^0.2) and a random prime in [n^0.4, 2n^0.4] (seeded by --cdxz-seed)",
    )
    p.add_argument("--cdxz-seed", type=int, default=0)
    p.add_argument("--cp-threshold", type=int, default=64, help="conv-cp base-case side length (default 64)")
    p.add_argument("--precision", type=int, default=None, help="multiply decimal input coordinates by this factor")


def _backend_config(args, algo: str, n: int):
    if algo == "conv-cdxz":
        if args.cdxz_theoretical:
            return CdxzConfig.theoretical(n, args.cdxz_seed)
        return CdxzConfig(args.cdxz_scale, args.cdxz_prime)
    if algo == "conv-cp":
        if args.cp_threshold < 1:
            raise ConfigError("--cp-threshold must be >= 1")
        return {"base_threshold": args.cp_threshold}
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paretosum", description="Exact and approximate Pareto sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", required=True, choices=["range", "near-linear", "near-curved"])
    g.add_argument("--n", type=int, default=1000)
    g.add_argument("--range-factor", type=float, default=2.0)
    g.add_argument("--curve-constant", type=int, default=None)
    g.add_argument("--perturb-fraction", type=float, default=0.1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    e = sub.add_parser("exact", help="compute an exact Pareto sum")
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--algo", required=True, choices=ALGORITHMS)
    e.add_argument("--out", required=True)
    _add_backend_flags(e)

    a = sub.add_parser("approx", help="compute a 2t-approximate Pareto sum")
    a.add_argument("--in", dest="inp", required=True)
    a.add_argument("--algo", default="bsc", choices=ALGORITHMS)
    a.add_argument("--t", type=int, required=True)
    a.add_argument("--weak", action="store_true", help="round up and rescale (no witnesses needed)")
    a.add_argument("--out", required=True)
    _add_backend_flags(a)

    v = sub.add_parser("eval", help="directed Hausdorff quality of an approximation")
    v.add_argument("--exact", required=True)
    v.add_argument("--approx", required=True)
    v.add_argument("--precision", type=int, default=None)

    b = sub.add_parser("bench", help="benchmark sweep with CSV output")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--suite", choices=["range", "near-linear", "near-curved"])
    src.add_argument("--files", nargs="+", help="instance files instead of generated ones")
    b.add_argument("--sizes", type=_int_list, default=[1000])
    b.add_argument("--seed", type=int, default=0, help="first instance seed")
    b.add_argument("--instances", type=int, default=1, help="instances per size (seeds seed, seed+1, ...)")
    b.add_argument("--range-factor", type=float, default=2.0)
    b.add_argument("--algos", type=_str_list, default=["bsc"])
    b.add_argument("--t-values", type=_int_list, default=[1])
    b.add_argument("--weak", action="store_true")
    b.add_argument("--repeats", type=int, default=10)
    b.add_argument("--timeout-secs", type=float, default=3600.0)
    b.add_argument("--workers", type=int, default=None, help="parallel cells (capped by PARETO_SUM_THREADS)")
    b.add_argument("--csv", required=True)
    _add_backend_flags(b)
    return parser


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(
            kind=Kind.parse(args.kind),
            n=args.n,
            range_factor=args.range_factor,
            curve_constant=args.curve_constant,
            perturb_fraction=args.perturb_fraction,
            seed=args.seed,
        )
    except (ConfigError, RangeTooSmall) as exc:
        raise UsageError(str(exc)) from None
    P, Q = generate(spec)
    write_instance(args.out, P, Q)
    print(f"n={len(P)} m={len(Q)} W={max(P.W, Q.W)}")
    return 0


def _timed(fn):
    t0 = time.perf_counter_ns()
    out = fn()
    return out, time.perf_counter_ns() - t0


def cmd_exact(args) -> int:
    P, Q = read_instance(args.inp, args.precision)
    cfg = _backend_config(args, args.algo, max(len(P), len(Q)))
    res, ns = _timed(lambda: pareto_sum(P, Q, args.algo, cfg))
    write_result(args.out, res)
    print(f"k={len(res)} time_ns={ns}")
    return 0


def cmd_approx(args) -> int:
    if args.t < 1:
        raise UsageError("--t must be an integer >= 1")
    if not args.weak and args.algo not in WITNESSED:
        raise UsageError(f"strong mode needs witnesses, which {args.algo} does not report; add --weak")
    P, Q = read_instance(args.inp, args.precision)
    cfg = _backend_config(args, args.algo, max(len(P), len(Q)))
    fn = weak_approximate_pareto_sum if args.weak else approximate_pareto_sum
    res, ns = _timed(lambda: fn(P, Q, args.t, args.algo, cfg))
    write_result(args.out, res.points)
    print(f"k={len(res.points)} time_ns={ns} guarantee={res.guarantee}")
    return 0


def cmd_eval(args) -> int:
    exact = read_result(args.exact, args.precision)
    approx = read_result(args.approx, args.precision)
    rep = evaluate_quality(exact, approx)
    print(f"delta={rep.delta_measured} size_ratio={rep.size_ratio:.6g}")
    return 0


def cmd_bench(args) -> int:
    if args.repeats < 1 or args.instances < 1 or args.timeout_secs <= 0:
        raise UsageError("--repeats, --instances and --timeout-secs must be positive")
    if any(t < 1 for t in args.t_values):
        raise UsageError("--t-values must be integers >= 1")
    for a in args.algos:
        if a not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from {', '.join(ALGORITHMS)}")
    if args.files:
        instances = file_instances(args.files, args.precision)
    else:
        seeds = range(args.seed, args.seed + args.instances)
        try:
            instances = generated_instances(args.suite, args.sizes, seeds, args.range_factor)
        except (ConfigError, RangeTooSmall) as exc:
            raise UsageError(str(exc)) from None
    n_max = max(max(len(i.P), len(i.Q)) for i in instances)
    config = {a: _backend_config(args, a, n_max) for a in args.algos}
    records = run_bench(
        instances,
        args.algos,
        args.t_values,
        repeats=args.repeats,
        timeout_secs=args.timeout_secs,
        weak=args.weak,
        config=config,
        workers=args.workers,
        log=lambda msg: print(msg, file=sys.stderr),
    )
    append_csv(args.csv, records)
    print(f"rows={len(records)} csv={args.csv}")
    return 0


COMMANDS = {"gen": cmd_gen, "exact": cmd_exact, "approx": cmd_approx, "eval": cmd_eval, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"paretosum {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ParetoSumError, OSError) as exc:
        print(f"paretosum {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
