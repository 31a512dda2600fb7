"""
Shared Logging Module

구조화 JSON 로깅 시스템
"""

from .unified_logger import LogLevel, UnifiedLogger, get_logger, setup_logging

__all__ = [
    "UnifiedLogger",
    "get_logger",
    "setup_logging",
    "LogLevel",
]
