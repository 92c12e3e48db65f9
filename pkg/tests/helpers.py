"""Shared test utilities: random instances and brute-force condition checks."""

from __future__ import annotations

import numpy as np

from paretosum import GenSpec, Kind, ParetoSet, generate

KINDS = (Kind.RANGE, Kind.NEAR_LINEAR, Kind.NEAR_CURVED)


def random_pareto_set(rng, n: int, W: int) -> ParetoSet:
    """n points with distinct x and y drawn from [0, W]."""
    xs = np.sort(rng.choice(W + 1, size=n, replace=False))
    ys = np.sort(rng.choice(W + 1, size=n, replace=False))[::-1]
    return ParetoSet.from_arrays(xs, ys)


def random_monotone(rng, max_len: int = 128, W: int = 256) -> np.ndarray:
    n = int(rng.integers(1, max_len + 1))
    w = int(rng.integers(0, W + 1))
    return np.sort(rng.integers(0, w + 1, size=n))[::-1].copy()


def generated_pair(kind: Kind, seed: int, max_n: int = 64, max_W: int = 512):
    """(P, Q) from the generator of ``kind`` with independent sizes n, m <= max_n."""
    rng = np.random.default_rng(seed)
    sets = []
    for _ in range(2):
        n = int(rng.integers(1, max_n + 1))
        rf = float(rng.uniform(1.0, max_W / n))
        s = int(rng.integers(0, 2**32))
        sets.append(generate(GenSpec(kind=kind, n=n, range_factor=rf, seed=s))[0])
    return sets[0], sets[1]


def corpus(per_kind: int, seed: int = 0, max_n: int = 64, max_W: int = 512):
    """``per_kind`` generated instances of each kind, deterministic."""
    out = []
    for ki, kind in enumerate(KINDS):
        for i in range(per_kind):
            out.append((kind,) + generated_pair(kind, seed * 1_000_003 + ki * 100_000 + i, max_n, max_W))
    return out


def all_sums(P: ParetoSet, Q: ParetoSet) -> tuple[np.ndarray, np.ndarray]:
    return (P.xs[:, None] + Q.xs[None, :]).ravel(), (P.ys[:, None] + Q.ys[None, :]).ravel()


def covers_all_sums(P: ParetoSet, Q: ParetoSet, S: ParetoSet, slack: int) -> bool:
    """Every p + q has some s in S with s <= p + q + (slack, slack)."""
    sx, sy = all_sums(P, Q)
    # smallest y of S among points with x <= sx + slack
    j = np.searchsorted(S.xs, sx + slack, side="right")
    prefix_min = np.minimum.accumulate(S.ys)
    ok = j > 0
    best = np.where(ok, prefix_min[np.maximum(j - 1, 0)], np.iinfo(np.int64).max)
    return bool(np.all(ok) and np.all(best <= sy + slack))


def within_sums(P: ParetoSet, Q: ParetoSet, S: ParetoSet, slack: int) -> bool:
    """Every s in S has some p + q with p + q <= s <= p + q + (slack, slack)."""
    sx, sy = all_sums(P, Q)
    for x, y in zip(S.xs.tolist(), S.ys.tolist()):
        dx, dy = x - sx, y - sy
        if not np.any((dx >= 0) & (dy >= 0) & (dx <= slack) & (dy <= slack)):
            return False
    return True


def point_list(result) -> list[tuple[int, int]]:
    return [(int(r.point.x), int(r.point.y)) if hasattr(r, "point") else (int(r[0]), int(r[1])) for r in result]
