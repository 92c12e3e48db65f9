"""Min-plus convolution backends."""

from .base import INF, ConvResult, MonotoneArray
from .cdxz import CdxzConfig, CdxzScratch, cdxz_minplus
from .convex import ConvexApprox, RelevantRegion, convex_minplus, convex_witness_path, in_relevant_region, lower_hull_approx
from .enhanced import enhanced_minplus, run_starts
from .naive import naive_minplus
from .poly import poly_multiply_counts
from .pruning import convex_pruning_minplus

__all__ = [
    "INF",
    "CdxzConfig",
    "CdxzScratch",
    "ConvResult",
    "ConvexApprox",
    "MonotoneArray",
    "RelevantRegion",
    "cdxz_minplus",
    "convex_minplus",
    "convex_pruning_minplus",
    "convex_witness_path",
    "enhanced_minplus",
    "in_relevant_region",
    "lower_hull_approx",
    "naive_minplus",
    "poly_multiply_counts",
    "run_starts",
]
