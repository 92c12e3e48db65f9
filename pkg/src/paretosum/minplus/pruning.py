from __future__ import annotations

import numpy as np

from .base import INF, ConvResult, as_int_array, is_non_increasing
from .convex import RelevantRegion, lower_hull_approx
from .enhanced import enhanced_minplus
from .naive import naive_minplus


def convex_pruning_minplus(
    A,
    B,
    want_witnesses: bool = False,
    base_threshold: int = 64,
    *,
    debug: bool = False,
) -> ConvResult:
    """Exact min-plus convolution that skips index rectangles outside ``R_2G``.

    Rectangles ``[iA, iB] x [jA, jB]`` are split in four until they are
    provably outside the relevant region (checked at the corner nearest the
    witness path), have both corners inside it, or are at most
    ``base_threshold`` on each side.  Surviving rectangles are convolved with
    :func:`enhanced_minplus` (naive for non-monotone input) and min-merged.

    ``pruned_fraction`` is the share of the ``|A| * |B|`` index pairs that lie
    in discarded rectangles.  With ``debug=True`` every discarded rectangle is
    checked against a naive reference to contain no witness.
    """
    A = as_int_array(A)
    B = as_int_array(B)
    na, nb = len(A), len(B)
    region = RelevantRegion(lower_hull_approx(A), lower_hull_approx(B))
    solve = enhanced_minplus if (is_non_increasing(A) and is_non_increasing(B)) else naive_minplus
    truth = naive_minplus(A, B).values if debug else None

    C = np.full(na + nb - 1, INF, dtype=np.int64)
    wit = np.full(na + nb - 1, -1, dtype=np.int64) if want_witnesses else None
    pruned = 0
    contains = region.contains
    path = region.path
    stack = [(0, na - 1, 0, nb - 1)]
    while stack:
        iA, iB, jA, jB = stack.pop()
        upper_in = contains(iA, jB)
        if not upper_in and iA > path[iA + jB]:
            pruned += _discard(A, B, truth, iA, iB, jA, jB)
            continue
        lower_in = contains(iB, jA)
        if not lower_in and iB < path[iB + jA]:
            pruned += _discard(A, B, truth, iA, iB, jA, jB)
            continue
        h, w = iB - iA + 1, jB - jA + 1
        if (upper_in and lower_in) or (h <= base_threshold and w <= base_threshold):
            sub = solve(A[iA : iB + 1], B[jA : jB + 1], want_witnesses)
            seg = C[iA + jA : iB + jB + 1]
            if wit is None:
                np.minimum(seg, sub.values, out=seg)
            else:
                sw = sub.witnesses + iA
                cw = wit[iA + jA : iB + jB + 1]
                better = (sub.values < seg) | ((sub.values == seg) & (sw < cw))
                seg[better] = sub.values[better]
                cw[better] = sw[better]
            continue
        im = (iA + iB) // 2 if h > 1 else iB
        jm = (jA + jB) // 2 if w > 1 else jB
        for i0, i1 in ((iA, im), (im + 1, iB)):
            if i0 > i1:
                continue
            for j0, j1 in ((jA, jm), (jm + 1, jB)):
                if j0 <= j1:
                    stack.append((i0, i1, j0, j1))
    res = ConvResult(C, wit, pruned_fraction=pruned / (na * nb))
    res.extra["gamma"] = region.gamma
    return res


def _discard(A, B, truth, iA, iB, jA, jB) -> int:
    if truth is not None:
        block = A[iA : iB + 1, None] + B[None, jA : jB + 1]
        ks = np.add.outer(np.arange(iA, iB + 1), np.arange(jA, jB + 1))
        if np.any(block <= truth[ks]):
            raise AssertionError(f"convex pruning discarded a witness in [{iA},{iB}]x[{jA},{jB}]")
    return (iB - iA + 1) * (jB - jA + 1)
