"""
혼합 치유 모형 Entities
"""

from .error_dist_estimate import ErrorDistEstimate
from .fitted_cure_model import FittedCureModel, LocalFit

__all__ = [
    "ErrorDistEstimate",
    "FittedCureModel",
    "LocalFit",
]
