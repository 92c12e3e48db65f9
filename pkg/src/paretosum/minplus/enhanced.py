from __future__ import annotations

import numpy as np

from .base import INF, ConvResult, as_int_array, require_non_increasing


def run_starts(a: np.ndarray) -> np.ndarray:
    """First index of every maximal run of equal values."""
    return np.concatenate(([0], np.flatnonzero(a[1:] != a[:-1]) + 1)).astype(np.int64)


def enhanced_minplus(A, B, want_witnesses: bool = False) -> ConvResult:
    """Min-plus convolution of non-increasing arrays in O(m * l) for m, l value runs.

    Only run-start index sums can open a new minimum; a running prefix minimum
    fills in the rest.  Witnesses are the smallest minimizing i: for
    non-increasing inputs that index is either an A run start or pairs with the
    last index of B.
    """
    A = as_int_array(A)
    B = as_int_array(B)
    require_non_increasing(A, B)
    na, nb = len(A), len(B)
    sa, sb = run_starts(A), run_starts(B)
    va, vb = A[sa], B[sb]
    C = np.full(na + nb - 1, INF, dtype=np.int64)
    if len(sa) <= len(sb):
        for a0, v in zip(sa.tolist(), va.tolist()):
            pos = a0 + sb
            C[pos] = np.minimum(C[pos], v + vb)
    else:
        for b0, v in zip(sb.tolist(), vb.tolist()):
            pos = b0 + sa
            C[pos] = np.minimum(C[pos], v + va)
    np.minimum.accumulate(C, out=C)
    wit = _smallest_witnesses(A, B, sa, C) if want_witnesses else None
    return ConvResult(C, wit)


def _smallest_witnesses(A: np.ndarray, B: np.ndarray, sa: np.ndarray, C: np.ndarray) -> np.ndarray:
    na, nb = len(A), len(B)
    wit = np.full(len(C), na, dtype=np.int64)
    # candidates i = A run start, all j
    for a0 in sa.tolist():
        ks = slice(a0, a0 + nb)
        hit = (A[a0] + B) == C[ks]
        w = wit[ks]
        w[hit] = np.minimum(w[hit], a0)
    # candidates j = nb - 1, all i
    ks = slice(nb - 1, nb - 1 + na)
    hit = (A + B[nb - 1]) == C[ks]
    w = wit[ks]
    w[hit] = np.minimum(w[hit], np.arange(na, dtype=np.int64)[hit])
    return wit
