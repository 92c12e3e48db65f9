"""Benchmark sweeps: generate instances, time algorithms, append CSV rows.

Each (instance, algorithm, t) cell runs in its own worker interpreter so
that a run exceeding the timeout can be killed; a small thread pool
supervises the workers.  Workers talk over pipes (POSIX ``select``).  Rows are written in a fixed order once all cells finish, so two
identical invocations differ only in their time column.
"""

from __future__ import annotations

import csv
import os
import pickle
import select
import struct
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .approx import approximate_pareto_sum, evaluate_quality, weak_approximate_pareto_sum
from .core import ParetoSet, as_pareto_set
from .dispatch import WITNESSED, normalize_algo, pareto_sum
from .errors import BudgetExceeded, ConfigError
from .generators import GenSpec, Kind, generate, read_instance


@dataclass
class BenchRecord:
    instance_id: str
    kind: str
    n_p: int
    n_q: int
    W: int
    algo: str
    mode: str
    t: int
    output_size: int | str
    delta_measured: int | str
    pruned_fraction: float | str
    time_nanos: int
    repeats: int
    seed: int | str


CSV_HEADER = [f.name for f in fields(BenchRecord)]

_SRC_ROOT = str(Path(__file__).resolve().parents[1])
_STARTUP_SECS = 120.0


@dataclass(frozen=True)
class Instance:
    instance_id: str
    kind: str
    seed: int | str
    P: ParetoSet
    Q: ParetoSet

    @property
    def W(self) -> int:
        return max(self.P.W, self.Q.W)


def generated_instances(suite: str, sizes, seeds, range_factor: float = 2.0) -> list[Instance]:
    kind = Kind.parse(suite)
    out = []
    for n in sizes:
        for seed in seeds:
            P, Q = generate(GenSpec(kind=kind, n=n, range_factor=range_factor, seed=seed))
            out.append(Instance(f"{kind.value}-n{n}-s{seed}", kind.value, seed, P, Q))
    return out


def file_instances(paths, precision: int | None = None) -> list[Instance]:
    out = []
    for p in paths:
        P, Q = read_instance(p, precision)
        out.append(Instance(Path(p).stem, "file", "", P, Q))
    return out


def mode_for(algo: str, t: int, weak: bool) -> str:
    if t == 1:
        return "exact"
    if weak or algo not in WITNESSED:
        return "weak"
    return "strong"


def run_once(inst: Instance, algo: str, mode: str, t: int, config=None, stats: dict | None = None):
    """Run one cell and return its points; only the algorithm call is timed."""
    if mode == "exact":
        return as_pareto_set(pareto_sum(inst.P, inst.Q, algo, config, stats=stats))
    if mode == "strong":
        return approximate_pareto_sum(inst.P, inst.Q, t, algo, config, stats=stats).points
    return weak_approximate_pareto_sum(inst.P, inst.Q, t, algo, config, stats=stats).points


def _send(stream, msg) -> None:
    blob = pickle.dumps(msg, protocol=pickle.HIGHEST_PROTOCOL)
    stream.write(struct.pack("<Q", len(blob)) + blob)
    stream.flush()


def _recv(stream):
    head = stream.read(8)
    if len(head) < 8:
        raise EOFError
    size = struct.unpack("<Q", head)[0]
    blob = stream.read(size)
    if len(blob) < size:
        raise EOFError
    return pickle.loads(blob)


def _worker_main() -> None:
    """Child side: read one job from stdin, stream one message per run to stdout."""
    out = sys.stdout.buffer
    sys.stdout = sys.stderr  # stray prints must not corrupt the message stream
    inst, algo, mode, t, config, repeats = pickle.load(sys.stdin.buffer)
    _send(out, ("ready", None, None))
    try:
        for r in range(repeats):
            stats: dict = {}
            t0 = time.perf_counter_ns()
            pts = run_once(inst, algo, mode, t, config, stats)
            elapsed = time.perf_counter_ns() - t0
            last = r == repeats - 1
            _send(out, ("run", elapsed, (pts.xs, pts.ys, stats.get("pruned_fraction")) if last else None))
    except Exception as exc:  # reported as a failed row, the sweep continues
        _send(out, ("error", f"{type(exc).__name__}: {exc}", None))


def _wait(stream, timeout: float) -> bool:
    return bool(select.select([stream], [], [], timeout)[0])


def run_cell(inst: Instance, algo: str, mode: str, t: int, config, repeats: int, timeout: float):
    """(mean time ns or -1, points or None, pruned fraction, error message).

    The cell runs in a fresh interpreter so a run past ``timeout`` seconds can
    be killed without touching the caller's process.
    """
    env = dict(os.environ)
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [_SRC_ROOT, env.get("PYTHONPATH")]))
    proc = subprocess.Popen(
        [sys.executable, "-c", "from paretosum.bench import _worker_main; _worker_main()"],
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        env=env,
    )
    times, payload, err = [], None, None
    try:
        pickle.dump((inst, algo, mode, t, config, repeats), proc.stdin, protocol=pickle.HIGHEST_PROTOCOL)
        proc.stdin.close()
        if not _wait(proc.stdout, _STARTUP_SECS):
            err = "worker did not start"
        else:
            _recv(proc.stdout)
            for _ in range(repeats):
                if not _wait(proc.stdout, timeout):
                    err = "timeout"
                    break
                kind, value, data = _recv(proc.stdout)
                if kind == "error":
                    err = value
                    break
                times.append(value)
                payload = data
    except (EOFError, BrokenPipeError):
        err = "worker died"
    finally:
        if proc.poll() is None:
            proc.kill()
        proc.wait()
        proc.stdout.close()
    if err is not None:
        return -1, None, None, err
    pts = ParetoSet.from_arrays(payload[0], payload[1], check=False)
    return round(sum(times) / len(times)), pts, payload[2], None


def reference_front(inst: Instance) -> ParetoSet:
    try:
        return as_pareto_set(pareto_sum(inst.P, inst.Q, "bsc"))
    except BudgetExceeded:
        return as_pareto_set(pareto_sum(inst.P, inst.Q, "sc"))


def worker_count(requested: int | None = None) -> int:
    cap = os.environ.get("PARETO_SUM_THREADS")
    n = requested or os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise ConfigError(f"PARETO_SUM_THREADS must be an integer, got {cap!r}") from None
    return max(1, n)


def run_bench(
    instances: list[Instance],
    algos,
    t_values,
    *,
    repeats: int = 10,
    timeout_secs: float = 3600.0,
    weak: bool = False,
    config=None,
    workers: int | None = None,
    log=None,
) -> list[BenchRecord]:
    """Time every (instance, algo, t) cell; one record per cell in input order."""
    algos = [normalize_algo(a) for a in algos]
    t_values = [int(t) for t in t_values]
    if repeats < 1:
        raise ConfigError("repeats must be >= 1")
    if any(t < 1 for t in t_values):
        raise ConfigError("t values must be >= 1")
    cells = [(inst, a, t) for inst in instances for a in algos for t in t_values]
    refs = {inst.instance_id: reference_front(inst) for inst in instances}

    def job(cell):
        inst, algo, t = cell
        mode = mode_for(algo, t, weak)
        cfg = config.get(algo) if isinstance(config, dict) else config
        mean, pts, pruned, err = run_cell(inst, algo, mode, t, cfg, repeats, timeout_secs)
        if err is not None and log is not None:
            log(f"{inst.instance_id} {algo} t={t}: {err}")
        delta = evaluate_quality(refs[inst.instance_id], pts).delta_measured if pts is not None else ""
        return BenchRecord(
            inst.instance_id, inst.kind, len(inst.P), len(inst.Q), inst.W, algo, mode, t,
            len(pts) if pts is not None else "", delta,
            pruned if (pruned is not None and algo == "conv-cp") else "",
            mean, repeats, inst.seed,
        )

    with ThreadPoolExecutor(max_workers=worker_count(workers)) as pool:
        return list(pool.map(job, cells))


def append_csv(path, records: list[BenchRecord]) -> None:
    """Append rows, writing the header only to a new or empty file."""
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    if not fresh:
        with path.open(newline="", encoding="utf-8") as fh:
            head = next(csv.reader(fh), None)
        if head != CSV_HEADER:
            raise ConfigError(f"{path} has a different CSV header; refusing to append")
    with path.open("a", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\n")
        if fresh:
            w.writeheader()
        for r in records:
            w.writerow(asdict(r))
