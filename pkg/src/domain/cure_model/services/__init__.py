"""
혼합 치유 모형 Domain Services
"""

from .cure_estimators import (
    estimate_m,
    estimate_pi,
    estimate_s,
    estimate_tau0,
    fit_cure_model,
    quantile_xi,
)
from .error_distribution import default_grid_range, estimate_F, estimate_F_grid

__all__ = [
    "estimate_m",
    "estimate_pi",
    "estimate_s",
    "estimate_tau0",
    "fit_cure_model",
    "quantile_xi",
    "default_grid_range",
    "estimate_F",
    "estimate_F_grid",
]
