"""
모형 적합 Data Transfer Objects (DTOs)
"""

from .fit_request_dto import MIN_FIT_ROWS, FitRequestDTO
from .fit_response_dto import CurvePointDTO, ErrorDistributionDTO, FitResponseDTO, FitSummaryDTO

__all__ = [
    "MIN_FIT_ROWS",
    "FitRequestDTO",
    "CurvePointDTO",
    "ErrorDistributionDTO",
    "FitResponseDTO",
    "FitSummaryDTO",
]
