"""
cure-model 하위 명령
"""

from typing import Dict, Type

from ..options import CommonOptions
from .bootstrap import BootstrapCommand, CoverageCommand
from .fitting import CompareCommand, FitCommand
from .simulation import GenerateCommand, SimulateCommand

# 매니페스트의 command 이름 → 명령 클래스
COMMANDS: Dict[str, Type[CommonOptions]] = {
    command.COMMAND: command
    for command in (
        FitCommand,
        CompareCommand,
        BootstrapCommand,
        CoverageCommand,
        SimulateCommand,
        GenerateCommand,
    )
}

__all__ = [
    "COMMANDS",
    "BootstrapCommand",
    "CompareCommand",
    "CoverageCommand",
    "FitCommand",
    "GenerateCommand",
    "SimulateCommand",
]
