"""Exact and additively approximate Pareto sums of 2-D Pareto sets."""

from .approx import (
    ApproxResult,
    QualityReport,
    RepresentativeMap,
    approximate_pareto_sum,
    evaluate_quality,
    weak_approximate_pareto_sum,
)
from .core import (
    ParetoSet,
    Point,
    WitnessedPoint,
    as_pareto_set,
    brute_force_pareto_sum,
    dominates,
    pareto_front,
    validate_pareto_set,
)
from .dispatch import ALGORITHMS, pareto_sum
from .exact import bucketsort_compare, sort_compare, successive_sweep
from .generators import GenSpec, Kind, generate, read_instance, read_result, write_instance, write_result
from .reduction import ReductionContext, bounded_pareto_sum, conv_to_pareto, pareto_to_conv

__all__ = [
    "ALGORITHMS",
    "ApproxResult",
    "GenSpec",
    "Kind",
    "ParetoSet",
    "Point",
    "QualityReport",
    "ReductionContext",
    "RepresentativeMap",
    "WitnessedPoint",
    "approximate_pareto_sum",
    "as_pareto_set",
    "bounded_pareto_sum",
    "brute_force_pareto_sum",
    "bucketsort_compare",
    "conv_to_pareto",
    "dominates",
    "evaluate_quality",
    "generate",
    "pareto_front",
    "pareto_sum",
    "pareto_to_conv",
    "read_instance",
    "read_result",
    "sort_compare",
    "successive_sweep",
    "validate_pareto_set",
    "weak_approximate_pareto_sum",
    "write_instance",
    "write_result",
]
