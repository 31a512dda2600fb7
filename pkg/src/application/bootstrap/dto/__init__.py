"""
부트스트랩 Data Transfer Objects (DTOs)
"""

from .bootstrap_dto import (
    BAND_TOLERANCE,
    BootstrapConfig,
    ConfidenceBand,
    CoverageConfig,
    CoverageReport,
)

__all__ = [
    "BAND_TOLERANCE",
    "BootstrapConfig",
    "ConfidenceBand",
    "CoverageConfig",
    "CoverageReport",
]
