from __future__ import annotations

import numpy as np

from .base import INF, ConvResult, as_int_array


def naive_minplus(A, B, want_witnesses: bool = False) -> ConvResult:
    """Quadratic ``C[k] = min_i A[i] + B[k - i]``; witness is the smallest minimizing i.

    Works on arbitrary integer arrays.  The loop runs over the shorter input,
    each step a vectorized pass over the longer one.
    """
    A = as_int_array(A)
    B = as_int_array(B)
    na, nb = len(A), len(B)
    C = np.full(na + nb - 1, INF, dtype=np.int64)
    wit = np.full(na + nb - 1, -1, dtype=np.int64) if want_witnesses else None
    if na <= nb:
        for i in range(na):
            cand = A[i] + B
            seg = C[i : i + nb]
            better = cand < seg
            seg[better] = cand[better]
            if wit is not None:
                wit[i : i + nb][better] = i
    else:
        # descending j visits the smallest i = k - j first
        idx = np.arange(na, dtype=np.int64)
        for j in range(nb - 1, -1, -1):
            cand = A + B[j]
            seg = C[j : j + na]
            better = cand < seg
            seg[better] = cand[better]
            if wit is not None:
                wit[j : j + na][better] = idx[better]
    return ConvResult(C, wit)
