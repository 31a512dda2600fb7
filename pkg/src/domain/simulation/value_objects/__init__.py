"""
시뮬레이션 Value Objects
"""

from .true_model import SimulatedData, TrueModel, true_error_distribution

__all__ = [
    "SimulatedData",
    "TrueModel",
    "true_error_distribution",
]
