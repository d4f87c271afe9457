"""Exact Hessenberg-Toeplitz determinants with Schroeder, Fine and Catalan entries."""

from .hessenberg import HTSpec, d_minus, d_plus, det_fraction_free, det_recurrence
from .sequences import SequenceId

__version__ = "0.1.0"

__all__ = [
    "HTSpec",
    "SequenceId",
    "d_minus",
    "d_plus",
    "det_fraction_free",
    "det_recurrence",
]
