"""Convex minorants, linear-time convex convolution and the relevant region.

Hull values are exact rationals stored as ``num[i] / den[i]`` where ``den[i]``
is the x-length of the hull segment that contains ``i``.  Every comparison
clears denominators with Python integers, so nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import ConvexityViolated
from .base import ConvResult, as_int_array


@dataclass(frozen=True)
class ConvexApprox:
    """Lower convex hull of ``{(i, A[i])}`` interpolated at every index."""

    values: np.ndarray  # the original array A
    hull_vertices: np.ndarray
    num: np.ndarray
    den: np.ndarray
    gamma: Fraction  # max_i A[i] - A'[i]

    def __len__(self) -> int:
        return len(self.values)

    def value_at(self, i: int) -> Fraction:
        return Fraction(int(self.num[i]), int(self.den[i]))

    def segment_slopes(self) -> list[tuple[Fraction, int]]:
        """(slope, length) of every hull segment, left to right."""
        hv = self.hull_vertices.tolist()
        a = self.values
        return [(Fraction(int(a[v1] - a[v0]), v1 - v0), v1 - v0) for v0, v1 in zip(hv, hv[1:])]


def _lower_hull(a: list[int]) -> list[int]:
    hull: list[int] = []
    for i, y in enumerate(a):
        while len(hull) >= 2:
            o, p = hull[-2], hull[-1]
            # drop p unless (o, p, i) turns strictly counter-clockwise
            if (p - o) * (y - a[o]) - (a[p] - a[o]) * (i - o) <= 0:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def lower_hull_approx(A) -> ConvexApprox:
    """Best pointwise convex minorant of ``A`` and its slack ``gamma``."""
    a = as_int_array(A)
    n = len(a)
    hv = _lower_hull(a.tolist())
    if n == 1:
        num = a.astype(object)
        den = np.ones(1, dtype=object)
        return ConvexApprox(a, np.asarray(hv, dtype=np.int64), num, den, Fraction(0))
    idx = np.arange(n, dtype=np.int64)
    seg = np.searchsorted(np.asarray(hv[1:]), idx, side="left")  # segment containing i
    v0 = np.asarray(hv[:-1], dtype=np.int64)[seg]
    v1 = np.asarray(hv[1:], dtype=np.int64)[seg]
    length = v1 - v0
    span = int(np.abs(a).max()) * n
    # int64 is exact while |A| * n stays below 2**62; otherwise fall back to Python ints
    dt = np.int64 if span < 2**61 else object
    a_, v0_, v1_, len_, idx_ = (x.astype(dt) for x in (a, v0, v1, length, idx))
    num = a_[v0] * len_ + (a_[v1] - a_[v0]) * (idx_ - v0_)
    gap_num = a_ * len_ - num  # (A[i] - A'[i]) * den[i]
    gamma = Fraction(0)
    starts = np.concatenate(([0], np.flatnonzero(np.diff(seg)) + 1))
    for s, e in zip(starts.tolist(), starts[1:].tolist() + [n]):
        g = Fraction(int(max(gap_num[s:e])), int(len_[s]))
        if g > gamma:
            gamma = g
    return ConvexApprox(a, np.asarray(hv, dtype=np.int64), num, len_, gamma)


def _slopes(a: Sequence) -> list:
    return [a[i + 1] - a[i] for i in range(len(a) - 1)]


def _check_convex(slopes: list, name: str) -> None:
    for s0, s1 in zip(slopes, slopes[1:]):
        if s1 < s0:
            raise ConvexityViolated(f"{name} is not convex")


def _merge_path(seg_a: list[tuple], seg_b: list[tuple], na: int, nb: int) -> np.ndarray:
    """Witness path of the slope merge given (slope, run length) segments."""
    w = np.zeros(na + nb - 1, dtype=np.int64)
    k = i = 0
    ia = ib = 0
    while ia < len(seg_a) or ib < len(seg_b):
        take_a = ib == len(seg_b) or (ia < len(seg_a) and seg_a[ia][0] <= seg_b[ib][0])
        if take_a:
            length = seg_a[ia][1]
            w[k + 1 : k + 1 + length] = np.arange(i + 1, i + 1 + length)
            i += length
            ia += 1
        else:
            length = seg_b[ib][1]
            w[k + 1 : k + 1 + length] = i
            ib += 1
        k += length
    return w


def _runs(slopes: list) -> list[tuple]:
    out: list[list] = []
    for s in slopes:
        if out and out[-1][0] == s:
            out[-1][1] += 1
        else:
            out.append([s, 1])
    return [tuple(r) for r in out]


def convex_minplus(A, B) -> ConvResult:
    """Min-plus convolution of two convex sequences by merging their slopes.

    Values may be ints or Fractions.  ``witnesses`` is the merge path, which
    is non-decreasing in k and satisfies ``C[k] = A[w[k]] + B[k - w[k]]``.
    """
    if isinstance(A, ConvexApprox) and isinstance(B, ConvexApprox):
        w = convex_witness_path(A, B)
        vals = [A.value_at(int(i)) + B.value_at(k - int(i)) for k, i in enumerate(w)]
        return ConvResult(np.asarray(vals, dtype=object), w)
    a, b = list(A), list(B)
    if not a or not b:
        raise ConvexityViolated("empty input")
    sa, sb = _slopes(a), _slopes(b)
    _check_convex(sa, "A")
    _check_convex(sb, "B")
    w = _merge_path(_runs(sa), _runs(sb), len(a), len(b))
    vals = [a[int(i)] + b[k - int(i)] for k, i in enumerate(w)]
    if all(isinstance(v, (int, np.integer)) for v in vals):
        return ConvResult(np.asarray(vals, dtype=np.int64), w)
    return ConvResult(np.asarray(vals, dtype=object), w)


def convex_witness_path(approx_a: ConvexApprox, approx_b: ConvexApprox) -> np.ndarray:
    """Merge path of two hull approximations, computed segment by segment."""
    return _merge_path(approx_a.segment_slopes(), approx_b.segment_slopes(), len(approx_a), len(approx_b))


class RelevantRegion:
    """Membership in ``R_2G = {(i, j) : A'[i] + B'[j] <= C'[i + j] + 2G}``.

    ``C'[k]`` is evaluated as ``A'[w] + B'[k - w]`` along the witness path.
    ``gamma`` defaults to ``max(1, gamma_A, gamma_B)``.
    """

    def __init__(self, approx_a: ConvexApprox, approx_b: ConvexApprox, path=None, gamma: Fraction | None = None):
        self.path = (path if path is not None else convex_witness_path(approx_a, approx_b)).tolist()
        if gamma is None:
            gamma = max(Fraction(1), approx_a.gamma, approx_b.gamma)
        self.gamma = Fraction(gamma)
        self._an, self._ad = approx_a.num.tolist(), approx_a.den.tolist()
        self._bn, self._bd = approx_b.num.tolist(), approx_b.den.tolist()
        self._gn, self._gd = 2 * self.gamma.numerator, self.gamma.denominator

    def contains(self, i: int, j: int) -> bool:
        an, ad, bn, bd = self._an, self._ad, self._bn, self._bd
        w = self.path[i + j]
        v = i + j - w
        # lhs = an[i]/ad[i] + bn[j]/bd[j];  rhs = an[w]/ad[w] + bn[v]/bd[v] + gn/gd
        lhs_n = an[i] * bd[j] + bn[j] * ad[i]
        lhs_d = ad[i] * bd[j]
        rd = ad[w] * bd[v]
        rhs_n = (an[w] * bd[v] + bn[v] * ad[w]) * self._gd + self._gn * rd
        rhs_d = rd * self._gd
        return lhs_n * rhs_d <= rhs_n * lhs_d

    def above(self, i: int, j: int) -> bool:
        """(i, j) lies on the large-i side of the witness path."""
        return i > self.path[i + j]

    def below(self, i: int, j: int) -> bool:
        return i < self.path[i + j]


def in_relevant_region(i: int, j: int, approx_a: ConvexApprox, approx_b: ConvexApprox, conv: ConvResult, gamma=None) -> bool:
    """Exact test of ``A'[i] + B'[j] <= C'[i + j] + 2 * gamma``.

    ``conv`` is the convex convolution of the two approximations (its
    ``witnesses`` are the witness path).
    """
    return RelevantRegion(approx_a, approx_b, conv.witnesses, gamma).contains(i, j)
