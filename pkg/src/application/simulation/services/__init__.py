"""
시뮬레이션 Services
"""

from .dataset_generation import GeneratedDataset, draw_dataset, generate_dataset
from .monte_carlo_service import (
    MonteCarloService,
    MonteCarloTables,
    RunOutcome,
    run_monte_carlo,
    simulate_run,
)

__all__ = [
    "GeneratedDataset",
    "draw_dataset",
    "generate_dataset",
    "MonteCarloService",
    "MonteCarloTables",
    "RunOutcome",
    "run_monte_carlo",
    "simulate_run",
]
