"""
커널 평활 Value Objects
"""

from .kernel_spec import GAMMA_UPPER, BandwidthRule, KernelFamily, KernelSpec

__all__ = [
    "GAMMA_UPPER",
    "BandwidthRule",
    "KernelFamily",
    "KernelSpec",
]
