from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..errors import InvariantError, MonotonicityViolated

INF = np.iinfo(np.int64).max // 4


@dataclass(frozen=True)
class MonotoneArray:
    """Non-increasing integer array with entries in ``[0, W]``."""

    values: np.ndarray
    W: int

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.int64)
        if v.ndim != 1 or len(v) == 0:
            raise InvariantError("MonotoneArray needs a non-empty 1-D array")
        if np.any(np.diff(v) > 0):
            raise MonotonicityViolated("array is not non-increasing")
        if v[-1] < 0 or v[0] > self.W:
            raise InvariantError(f"entries must lie in [0, {self.W}]")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __len__(self) -> int:
        return len(self.values)


@dataclass
class ConvResult:
    """Min-plus convolution output.

    ``witnesses[k]`` (when present) is an index ``i`` with
    ``values[k] == A[i] + B[k - i]``.
    """

    values: np.ndarray
    witnesses: np.ndarray | None = None
    pruned_fraction: float | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)


def as_int_array(a) -> np.ndarray:
    arr = np.ascontiguousarray(a, dtype=np.int64)
    if arr.ndim != 1 or len(arr) == 0:
        raise InvariantError("convolution inputs must be non-empty 1-D arrays")
    return arr


def is_non_increasing(a: np.ndarray) -> bool:
    return bool(np.all(a[1:] <= a[:-1]))


def require_non_increasing(*arrays: np.ndarray) -> None:
    for a in arrays:
        if not is_non_increasing(a):
            raise MonotonicityViolated("input array is not non-increasing")
