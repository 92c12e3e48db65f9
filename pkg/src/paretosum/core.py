"""Points, dominance, Pareto fronts and the quadratic reference Pareto sum.

Everything downstream is checked against :func:`brute_force_pareto_sum`, so it
is kept deliberately plain: enumerate every sum, sort, sweep.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptyInput, InvariantError

# |x|, |y| <= 2**40 keeps every pairwise sum and cross-multiplied comparison exact.
MAX_COORD = 2**40


class Point(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])


class WitnessedPoint(NamedTuple):
    point: Point
    witness_p: int | None = None
    witness_q: int | None = None


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is componentwise <= ``b`` with at least one strict coordinate."""
    return a[0] <= b[0] and a[1] <= b[1] and (a[0] < b[0] or a[1] < b[1])


def _as_xy(points) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(points, ParetoSet):
        return points.xs, points.ys
    arr = np.asarray(list(points) if not isinstance(points, np.ndarray) else points, dtype=np.int64)
    if arr.size == 0:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    arr = arr.reshape(-1, 2)
    return arr[:, 0].copy(), arr[:, 1].copy()


def _valid_arrays(xs: np.ndarray, ys: np.ndarray) -> bool:
    if len(xs) == 0:
        return True
    if np.abs(xs).max() > MAX_COORD or np.abs(ys).max() > MAX_COORD:
        return False
    return bool(np.all(np.diff(xs) > 0) and np.all(np.diff(ys) < 0))


def validate_pareto_set(points: Iterable[Sequence[int]]) -> bool:
    """Check the ParetoSet invariants: x strictly up, y strictly down, magnitudes capped."""
    try:
        xs, ys = _as_xy(points)
    except (TypeError, ValueError, OverflowError):
        return False
    return _valid_arrays(xs, ys)


class ParetoSet:
    """Immutable 2-D Pareto set stored as two int64 columns in x order."""

    __slots__ = ("xs", "ys")

    def __init__(self, points: Iterable[Sequence[int]] = (), *, check: bool = True):
        xs, ys = _as_xy(points)
        if check and not _valid_arrays(xs, ys):
            raise InvariantError("points are not a Pareto set in (x ascending, y descending) order")
        xs.setflags(write=False)
        ys.setflags(write=False)
        self.xs = xs
        self.ys = ys

    @classmethod
    def from_arrays(cls, xs, ys, *, check: bool = True) -> "ParetoSet":
        xs = np.ascontiguousarray(xs, dtype=np.int64)
        ys = np.ascontiguousarray(ys, dtype=np.int64)
        if xs.shape != ys.shape or xs.ndim != 1:
            raise InvariantError("coordinate columns must be 1-D and of equal length")
        return cls(np.stack([xs, ys], axis=1) if len(xs) else (), check=check)

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def W(self) -> int:
        if not len(self.xs):
            return 0
        return int(max(self.xs.max(), self.ys.max()))

    @property
    def points(self) -> list[Point]:
        return [Point(int(x), int(y)) for x, y in zip(self.xs, self.ys)]

    def __len__(self) -> int:
        return len(self.xs)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return Point(int(self.xs[i]), int(self.ys[i]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParetoSet):
            return NotImplemented
        return np.array_equal(self.xs, other.xs) and np.array_equal(self.ys, other.ys)

    def __hash__(self):
        return hash((self.xs.tobytes(), self.ys.tobytes()))

    def __repr__(self) -> str:
        pts = ", ".join(f"({x},{y})" for x, y in zip(self.xs[:6], self.ys[:6]))
        more = ", ..." if len(self) > 6 else ""
        return f"ParetoSet([{pts}{more}], n={len(self)})"


def _front_indices(xs: np.ndarray, ys: np.ndarray, *tiebreak: np.ndarray) -> np.ndarray:
    """Indices of the non-dominated points, one per distinct point, in x order.

    Ties between identical points go to the smallest key in ``tiebreak``.
    """
    order = np.lexsort(tuple(reversed(tiebreak)) + (ys, xs))
    sx, sy = xs[order], ys[order]
    first = np.ones(len(order), dtype=bool)
    first[1:] = sx[1:] != sx[:-1]
    order, sy = order[first], sy[first]
    # keep a point iff its y beats every y to its left
    prev_min = np.minimum.accumulate(sy)
    keep = np.ones(len(order), dtype=bool)
    keep[1:] = sy[1:] < prev_min[:-1]
    return order[keep]


def pareto_front(points: Iterable[Sequence[int]]) -> ParetoSet:
    """Non-dominated points of an arbitrary point collection, deduplicated."""
    xs, ys = _as_xy(points)
    if len(xs) == 0:
        raise EmptyInput("pareto_front of an empty point set")
    idx = _front_indices(xs, ys)
    return ParetoSet.from_arrays(xs[idx], ys[idx])


def witnessed_points(xs, ys, wp, wq) -> list[WitnessedPoint]:
    return [
        WitnessedPoint(Point(int(x), int(y)), int(p), int(q))
        for x, y, p, q in zip(xs, ys, wp, wq)
    ]


def brute_force_pareto_sum(P: ParetoSet, Q: ParetoSet) -> list[WitnessedPoint]:
    """Skyline of all |P|*|Q| sums; witness ties go to the smallest (p, q) pair."""
    if len(P) == 0 or len(Q) == 0:
        return []
    ip, iq = np.meshgrid(np.arange(len(P)), np.arange(len(Q)), indexing="ij")
    ip, iq = ip.ravel(), iq.ravel()
    sx = P.xs[ip] + Q.xs[iq]
    sy = P.ys[ip] + Q.ys[iq]
    idx = _front_indices(sx, sy, ip, iq)
    return witnessed_points(sx[idx], sy[idx], ip[idx], iq[idx])


def as_pareto_set(result: Iterable) -> ParetoSet:
    """Strip witnesses from an algorithm result and wrap it as a ParetoSet."""
    pts = [r.point if isinstance(r, WitnessedPoint) else r for r in result]
    return ParetoSet(pts)
