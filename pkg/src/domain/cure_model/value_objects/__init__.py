"""
혼합 치유 모형 Value Objects
"""

from .score_function import (
    ScoreForm,
    ScoreFunction,
    empirical_breakpoints,
    standardization_constants,
    standardize_moments,
    weighted_moments,
)

__all__ = [
    "ScoreForm",
    "ScoreFunction",
    "empirical_breakpoints",
    "standardization_constants",
    "standardize_moments",
    "weighted_moments",
]
