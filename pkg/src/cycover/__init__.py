"""Exact invariants of Calabi-Yau double covers of Q-Fano 3-folds with 1/2(1,1,1) points."""

from .core import (
    ConsistencyError,
    CYCoverError,
    CYInvariants,
    FanoRecord,
    InputError,
    NonIntegralError,
    parse_rational,
    rational,
)
from .invariants import compute_all, exclude_l2

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CYCoverError",
    "CYInvariants",
    "FanoRecord",
    "InputError",
    "NonIntegralError",
    "compute_all",
    "exclude_l2",
    "parse_rational",
    "rational",
    "__version__",
]
