"""
커널 평활 Domain Services
"""

from .kernel_smoothing import (
    default_bandwidth,
    kernel_eval,
    kernel_values,
    normalize_kernel_weights,
    nw_weights,
    raw_kernel_weights,
    sample_sigma,
)

__all__ = [
    "default_bandwidth",
    "kernel_eval",
    "kernel_values",
    "normalize_kernel_weights",
    "nw_weights",
    "raw_kernel_weights",
    "sample_sigma",
]
