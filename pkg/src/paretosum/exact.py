"""Direct Pareto-sum algorithms over the implicit matrix ``M[i, j] = P[i] + Q[j]``.

* :func:`sort_compare` -- k-way merge of the columns of M through a heap.
* :func:`successive_sweep` -- one staircase range-min scan per output point.
* :func:`bucketsort_compare` -- per-x minimum in a bucket array, then one sweep.

All three report the (p, q) index pair that produced each output point.
"""

from __future__ import annotations

import heapq

import numpy as np

from .core import ParetoSet, Point, WitnessedPoint, witnessed_points
from .errors import BudgetExceeded

DEFAULT_BUCKET_BUDGET = 2**31


def sort_compare(P: ParetoSet, Q: ParetoSet) -> list[WitnessedPoint]:
    """Sort & Compare: pop sums in lexicographic order, keep the undominated ones.

    The heap starts with the first row ``M[0, j]``; popping ``M[i, j]`` pushes
    the next entry of column j that the newest output point does not dominate
    (or equal).  O(nm log m) time, O(m) heap.
    """
    n, m = len(P), len(Q)
    if n == 0 or m == 0:
        return []
    px, py = P.xs.tolist(), P.ys.tolist()
    qx, qy = Q.xs.tolist(), Q.ys.tolist()
    heap = [(px[0] + qx[j], py[0] + qy[j], 0, j) for j in range(m)]
    heapq.heapify(heap)
    out: list[WitnessedPoint] = []
    last_x = last_y = None
    while heap:
        x, y, i, j = heapq.heappop(heap)
        if last_y is None or y < last_y:
            out.append(WitnessedPoint(Point(x, y), i, j))
            last_x, last_y = x, y
        # Later column entries trade x for y, so a dominated successor does not
        # retire the column: skip ahead to the first entry the newest output
        # point does not cover.
        i += 1
        qxj, qyj = qx[j], qy[j]
        while i < n and last_x <= px[i] + qxj and last_y <= py[i] + qyj:
            i += 1
        if i < n:
            heapq.heappush(heap, (px[i] + qxj, py[i] + qyj, i, j))
    return out


def successive_sweep(P: ParetoSet, Q: ParetoSet, stats: dict | None = None) -> list[WitnessedPoint]:
    """Successive Sweep Search: find the next skyline point with a staircase scan.

    Each round walks the columns of M left to right, moving a shared row
    pointer upward to the first entry whose y undercuts the last output point;
    the lexicographically smallest such entry (ties: smallest (i, j)) is the
    next output point.  O(n + m) per round.
    """
    n, m = len(P), len(Q)
    if n == 0 or m == 0:
        return []
    px, py = P.xs.tolist(), P.ys.tolist()
    qx, qy = Q.xs.tolist(), Q.ys.tolist()
    out = [WitnessedPoint(Point(px[0] + qx[0], py[0] + qy[0]), 0, 0)]
    y_max = out[0].point.y
    rounds = 0
    while True:
        rounds += 1
        best = None
        r = n
        for j in range(m):
            yj = qy[j]
            while r > 0 and py[r - 1] + yj < y_max:
                r -= 1
            if r < n and py[r] + yj < y_max:
                cand = (px[r] + qx[j], py[r] + yj, r, j)
                if best is None or cand < best:
                    best = cand
        if best is None:
            break
        x, y, i, j = best
        out.append(WitnessedPoint(Point(x, y), i, j))
        y_max = y
    if stats is not None:
        stats["scan_rounds"] = rounds
    return out


def bucketsort_compare(
    P: ParetoSet, Q: ParetoSet, *, budget: int = DEFAULT_BUCKET_BUDGET
) -> list[WitnessedPoint]:
    """BucketSort & Compare: ``C[p.x + q.x] = min(p.y + q.y)``, then a prefix-min sweep.

    x coordinates are shifted so each set starts at 0 and shifted back on output.
    Witness ties go to the smallest (p, q) pair.
    """
    n, m = len(P), len(Q)
    if n == 0 or m == 0:
        return []
    off_p, off_q = int(P.xs[0]), int(Q.xs[0])
    pxs = P.xs - off_p
    qxs = Q.xs - off_q
    size = int(pxs[-1]) + int(qxs[-1]) + 1
    if size > budget:
        raise BudgetExceeded(
            f"bucket array of {size} entries exceeds budget {budget}; use sort_compare instead"
        )
    inf = np.iinfo(np.int64).max
    C = np.full(size, inf, dtype=np.int64)
    wp = np.full(size, -1, dtype=np.int64)
    wq = np.full(size, -1, dtype=np.int64)
    q_idx = np.arange(m, dtype=np.int64)
    qys = Q.ys
    for i in range(n):
        xs = pxs[i] + qxs
        ys = P.ys[i] + qys
        better = ys < C[xs]
        if better.any():
            xs = xs[better]
            C[xs] = ys[better]
            wp[xs] = i
            wq[xs] = q_idx[better]
    keep = np.zeros(size, dtype=bool)
    keep[0] = C[0] < inf
    keep[1:] = C[1:] < np.minimum.accumulate(C)[:-1]
    ks = np.flatnonzero(keep)
    return witnessed_points(ks + off_p + off_q, C[ks], wp[ks], wq[ks])
