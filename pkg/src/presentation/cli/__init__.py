"""
cure-model CLI
"""

from .errors import EXIT_ESTIMATION, EXIT_OK, EXIT_USAGE, CommandError
from .main import main

__all__ = [
    "EXIT_ESTIMATION",
    "EXIT_OK",
    "EXIT_USAGE",
    "CommandError",
    "main",
]
