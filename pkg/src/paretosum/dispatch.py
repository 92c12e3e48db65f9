"""One entry point for every exact Pareto-sum algorithm."""

from __future__ import annotations

from .core import ParetoSet, WitnessedPoint
from .errors import ConfigError
from .exact import bucketsort_compare, sort_compare, successive_sweep
from .reduction import bounded_pareto_sum

ALGORITHMS = ("sc", "sss", "bsc", "conv-naive", "conv-enhanced", "conv-cp", "conv-cdxz")
WITNESSED = frozenset(ALGORITHMS) - {"conv-cdxz"}


def normalize_algo(name: str) -> str:
    algo = name.strip().lower().replace("_", "-")
    if algo not in ALGORITHMS:
        raise ConfigError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    return algo


def pareto_sum(
    P: ParetoSet,
    Q: ParetoSet,
    algo: str = "bsc",
    config=None,
    *,
    stats: dict | None = None,
) -> list[WitnessedPoint]:
    """Exact Pareto sum of ``P`` and ``Q`` with the named algorithm.

    ``config`` is forwarded to convolution backends (a CdxzConfig for
    ``conv-cdxz``, ``{"base_threshold": ...}`` for ``conv-cp``).
    """
    algo = normalize_algo(algo)
    if algo == "sc":
        return sort_compare(P, Q)
    if algo == "sss":
        return successive_sweep(P, Q, stats)
    if algo == "bsc":
        return bucketsort_compare(P, Q)
    return bounded_pareto_sum(P, Q, algo[len("conv-"):], config, stats=stats)
