"""
부트스트랩 Services
"""

from .bootstrap_service import BootstrapService, ResamplingPlan, bootstrap_F_band, draw_replicate
from .coverage_study import CoverageStudy

__all__ = [
    "BootstrapService",
    "ResamplingPlan",
    "bootstrap_F_band",
    "draw_replicate",
    "CoverageStudy",
]
