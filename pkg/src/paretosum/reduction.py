"""Bounded Pareto sum through bounded monotone min-plus convolution.

After translating x so that each set starts at 0, a Pareto set becomes the
non-increasing array ``A[i] = min {p.y : p.x <= i}``.  The min-plus
convolution ``C = A (*) B`` then holds, for each x, the smallest y reachable
by a sum with abscissa at most x, and the Pareto sum is read off at the
strict drops of C.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ParetoSet, witnessed_points, WitnessedPoint
from .errors import BudgetExceeded, ConfigError, EmptyInput, InvariantError
from .minplus import (
    CdxzConfig,
    ConvResult,
    MonotoneArray,
    cdxz_minplus,
    convex_pruning_minplus,
    enhanced_minplus,
    naive_minplus,
)

DEFAULT_ARRAY_BUDGET = 2**28
BACKENDS = ("naive", "enhanced", "cp", "cdxz")


@dataclass(frozen=True)
class ReductionContext:
    offset_p: int
    offset_q: int
    array_len: int
    default_fill: int
    owner_p: np.ndarray  # owner_p[i]: index of the point of P that sets A[i]
    owner_q: np.ndarray


def _owners(xs: np.ndarray, length: int) -> np.ndarray:
    # the last point with x <= i has the smallest y among those
    return np.searchsorted(xs, np.arange(length), side="right") - 1


def pareto_to_conv(P: ParetoSet, Q: ParetoSet, budget: int = DEFAULT_ARRAY_BUDGET):
    """Arrays ``A``, ``B`` (as MonotoneArray) and the context to map back."""
    if len(P) == 0 or len(Q) == 0:
        raise EmptyInput("both Pareto sets must be non-empty")
    if P.ys[-1] < 0 or Q.ys[-1] < 0:
        raise InvariantError("the reduction needs non-negative y coordinates")
    off_p, off_q = int(P.xs[0]), int(Q.xs[0])
    px, qx = P.xs - off_p, Q.xs - off_q
    length = int(max(px[-1], qx[-1])) + 1
    if length > budget:
        raise BudgetExceeded(
            f"array length {length} exceeds the budget of {budget}; use a direct algorithm (sc, sss)"
        )
    fill = int(max(P.ys[0], Q.ys[0]))
    A = np.full(length, fill, dtype=np.int64)
    B = np.full(length, fill, dtype=np.int64)
    A[px] = P.ys
    B[qx] = Q.ys
    np.minimum.accumulate(A, out=A)
    np.minimum.accumulate(B, out=B)
    ctx = ReductionContext(off_p, off_q, length, fill, _owners(px, length), _owners(qx, length))
    return MonotoneArray(A, fill), MonotoneArray(B, fill), ctx


def conv_to_pareto(C: ConvResult, ctx: ReductionContext) -> list[WitnessedPoint]:
    """Pareto sum from the strict drops of ``C``, with (p, q) when witnesses exist."""
    vals = np.asarray(C.values)
    keep = np.ones(len(vals), dtype=bool)
    keep[1:] = vals[1:] < vals[:-1]
    ks = np.flatnonzero(keep)
    xs = ks + ctx.offset_p + ctx.offset_q
    ys = vals[ks]
    if C.witnesses is None:
        return [WitnessedPoint(p) for p in ParetoSet.from_arrays(xs, ys, check=False).points]
    i = np.asarray(C.witnesses)[ks]
    # at a strict drop the witness pair sits exactly at x = k, so the owners are exact
    return witnessed_points(xs, ys, ctx.owner_p[i], ctx.owner_q[ks - i])


def _convolve(A, B, backend: str, config, want_witnesses: bool) -> ConvResult:
    opts = dict(config) if isinstance(config, dict) else {}
    if backend == "naive":
        return naive_minplus(A, B, want_witnesses)
    if backend == "enhanced":
        return enhanced_minplus(A, B, want_witnesses)
    if backend == "cp":
        return convex_pruning_minplus(A, B, want_witnesses, **opts)
    if backend == "cdxz":
        cfg = config if isinstance(config, CdxzConfig) else CdxzConfig(**opts)
        return cdxz_minplus(A, B, cfg)
    raise ConfigError(f"unknown convolution backend {backend!r}; choose from {', '.join(BACKENDS)}")


def bounded_pareto_sum(
    P: ParetoSet,
    Q: ParetoSet,
    backend: str = "enhanced",
    backend_config=None,
    *,
    want_witnesses: bool = True,
    budget: int = DEFAULT_ARRAY_BUDGET,
    stats: dict | None = None,
) -> list[WitnessedPoint]:
    """Pareto sum via reduction, convolution backend and back-transformation.

    ``backend_config`` is a CdxzConfig for ``cdxz`` or a keyword dict for
    the backend (``base_threshold`` for ``cp``).  ``cdxz`` reports no
    witnesses.  When ``stats`` is given it receives ``array_len`` and, for
    ``cp``, ``pruned_fraction``.
    """
    if backend not in BACKENDS:
        raise ConfigError(f"unknown convolution backend {backend!r}; choose from {', '.join(BACKENDS)}")
    A, B, ctx = pareto_to_conv(P, Q, budget)
    C = _convolve(A.values, B.values, backend, backend_config, want_witnesses)
    if stats is not None:
        stats["array_len"] = ctx.array_len
        if C.pruned_fraction is not None:
            stats["pruned_fraction"] = C.pruned_fraction
    return conv_to_pareto(C, ctx)
