"""
시뮬레이션 Data Transfer Objects (DTOs)
"""

from .simulation_dto import MonteCarloReport, SimulationConfig

__all__ = [
    "MonteCarloReport",
    "SimulationConfig",
]
