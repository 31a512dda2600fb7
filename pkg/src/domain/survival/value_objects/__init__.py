"""
생존 자료 Value Objects
"""

from .observation import Observation, SurvivalSample, TiePolicy, break_ties

__all__ = [
    "Observation",
    "SurvivalSample",
    "TiePolicy",
    "break_ties",
]
