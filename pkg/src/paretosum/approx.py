"""Additive approximation of Pareto sums by scaling, and its quality measure.

Strong mode rounds both sets down by ``t``, solves the small instance with a
witness-reporting algorithm and maps every output back to a real sum through
per-cell representatives, so each returned point lies in ``P + Q``.  Weak
mode rounds up and scales the small result back, which is cheaper but only
guarantees points within ``(2t, 2t)`` above real sums.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ParetoSet, _front_indices
from .dispatch import WITNESSED, normalize_algo, pareto_sum
from .errors import ConfigError, EmptyInput


@dataclass(frozen=True)
class ApproxResult:
    points: ParetoSet
    t: int
    guarantee: int
    mode: str  # "strong" or "weak"
    witnesses: list[tuple[int, int]] | None = None


@dataclass(frozen=True)
class QualityReport:
    delta_measured: int
    size_ratio: float


class RepresentativeMap:
    """Rounded cell ``(x // t, y // t)`` -> original point of minimal L1 norm.

    Ties in norm go to the lexicographically smallest point.  ``front`` is the
    Pareto front of the rounded cells and ``rep[i]`` the index (into the
    original set) representing ``front[i]``.
    """

    def __init__(self, S: ParetoSet, t: int):
        self.t = t
        rx, ry = S.xs // t, S.ys // t
        norm = np.abs(S.xs) + np.abs(S.ys)
        # within a cell the first in (norm, x, y) order is the representative
        order = np.lexsort((S.ys, S.xs, norm, ry, rx))
        first = np.ones(len(order), dtype=bool)
        first[1:] = (rx[order][1:] != rx[order][:-1]) | (ry[order][1:] != ry[order][:-1])
        cells = order[first]
        idx = _front_indices(rx[cells], ry[cells])
        self.rep = cells[idx]
        self.front = ParetoSet.from_arrays(rx[self.rep], ry[self.rep])

    def __len__(self) -> int:
        return len(self.rep)

    def __getitem__(self, cell) -> int:
        i = int(np.searchsorted(self.front.xs, cell[0]))
        if i == len(self.front) or self.front[i] != tuple(cell):
            raise KeyError(cell)
        return int(self.rep[i])


def _check_t(t) -> int:
    if isinstance(t, bool) or int(t) != t or t < 1:
        raise ConfigError(f"t must be an integer >= 1, got {t!r}")
    return int(t)


def _insert_pareto(xs: list, ys: list, ws: list, x: int, y: int, w) -> None:
    """Insert (x, y) into a Pareto list, scanning back and dropping what it dominates."""
    pos = len(xs)
    while pos > 0 and xs[pos - 1] >= x:
        if ys[pos - 1] >= y:
            del xs[pos - 1], ys[pos - 1], ws[pos - 1]
        elif xs[pos - 1] == x:
            return  # same x, smaller y already present
        pos -= 1
    if pos > 0 and ys[pos - 1] <= y:
        return
    xs.insert(pos, x)
    ys.insert(pos, y)
    ws.insert(pos, w)


def approximate_pareto_sum(
    P: ParetoSet, Q: ParetoSet, t: int, inner: str = "bsc", config=None, *, stats: dict | None = None
) -> ApproxResult:
    """2t-approximate Pareto sum whose points are all genuine sums ``p + q``.

    ``stats`` is handed to the inner algorithm (see :func:`pareto_sum`).
    """
    t = _check_t(t)
    inner = normalize_algo(inner)
    if inner not in WITNESSED:
        raise ConfigError(f"strong approximation needs witnesses, which {inner} does not report; use weak mode")
    if len(P) == 0 or len(Q) == 0:
        raise EmptyInput("both Pareto sets must be non-empty")
    rp, rq = RepresentativeMap(P, t), RepresentativeMap(Q, t)
    S = pareto_sum(rp.front, rq.front, inner, config, stats=stats)
    zx: list[int] = []
    zy: list[int] = []
    zw: list[tuple[int, int]] = []
    for s in S:
        ip, iq = int(rp.rep[s.witness_p]), int(rq.rep[s.witness_q])
        _insert_pareto(zx, zy, zw, int(P.xs[ip] + Q.xs[iq]), int(P.ys[ip] + Q.ys[iq]), (ip, iq))
    return ApproxResult(ParetoSet.from_arrays(zx, zy), t, 2 * t, "strong", zw)


def weak_approximate_pareto_sum(
    P: ParetoSet, Q: ParetoSet, t: int, inner: str = "bsc", config=None, *, stats: dict | None = None
) -> ApproxResult:
    """Pareto sum of the sets rounded up by ``t``, scaled back by ``t``."""
    t = _check_t(t)
    if len(P) == 0 or len(Q) == 0:
        raise EmptyInput("both Pareto sets must be non-empty")

    def ceil_front(S: ParetoSet) -> ParetoSet:
        cx, cy = -(-S.xs // t), -(-S.ys // t)
        idx = _front_indices(cx, cy)
        return ParetoSet.from_arrays(cx[idx], cy[idx])

    S = pareto_sum(ceil_front(P), ceil_front(Q), inner, config, stats=stats)
    xs = np.fromiter((s.point.x for s in S), dtype=np.int64, count=len(S)) * t
    ys = np.fromiter((s.point.y for s in S), dtype=np.int64, count=len(S)) * t
    return ApproxResult(ParetoSet.from_arrays(xs, ys), t, 2 * t, "weak")


def _delta_sweep(S: ParetoSet, T: ParetoSet) -> int:
    # For a fixed s, s~.x - s.x rises and s~.y - s.y falls along T, so the
    # minimum of their max sits where x - y of s~ first reaches that of s.
    key_t = T.xs - T.ys
    key_s = S.xs - S.ys
    j = np.searchsorted(key_t, key_s, side="left")
    best = None
    for cand in (np.minimum(j, len(T) - 1), np.maximum(j - 1, 0)):
        d = np.maximum(T.xs[cand] - S.xs, T.ys[cand] - S.ys)
        best = d if best is None else np.minimum(best, d)
    return int(max(0, best.max()))


def _delta_brute(S: ParetoSet, T: ParetoSet) -> int:
    dx = T.xs[None, :] - S.xs[:, None]
    dy = T.ys[None, :] - S.ys[:, None]
    return int(np.maximum(0, np.maximum(dx, dy)).min(axis=1).max())


def evaluate_quality(S_exact: ParetoSet, S_approx: ParetoSet, method: str = "sweep") -> QualityReport:
    """Directed Hausdorff distance ``max_s min_s~ max(0, s~.x - s.x, s~.y - s.y)``.

    ``method="brute"`` compares every pair and serves as a reference.
    """
    if len(S_exact) == 0 or len(S_approx) == 0:
        raise EmptyInput("quality needs two non-empty sets")
    if method == "sweep":
        delta = _delta_sweep(S_exact, S_approx)
    elif method == "brute":
        delta = _delta_brute(S_exact, S_approx)
    else:
        raise ConfigError(f"unknown method {method!r}")
    return QualityReport(delta, len(S_approx) / len(S_exact))
