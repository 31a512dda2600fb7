"""
모형 적합 Services
"""

from .bandwidth_comparison_service import BandwidthComparison, BandwidthComparisonService
from .cure_fitting_service import (
    CureFittingService,
    FitOutcome,
    ResolvedBandwidth,
    evaluate_curves,
    resolve_kernel_spec,
)

__all__ = [
    "BandwidthComparison",
    "BandwidthComparisonService",
    "CureFittingService",
    "FitOutcome",
    "ResolvedBandwidth",
    "evaluate_curves",
    "resolve_kernel_spec",
]
