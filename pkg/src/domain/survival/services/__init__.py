"""
생존 자료 Domain Services
"""

from .beran import BeranTable, Continuity, beran_censor, beran_Q, subdist_M, subdist_M1

__all__ = [
    "BeranTable",
    "Continuity",
    "beran_censor",
    "beran_Q",
    "subdist_M",
    "subdist_M1",
]
