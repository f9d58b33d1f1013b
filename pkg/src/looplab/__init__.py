"""Finite loops from Cayley tables: associators, nuclei, association probabilities."""

from .errors import LoopLabError
from .table import Classification, Loop, MagmaTable, isomorphic, translations, two_sided_inverse, validate

__all__ = [
    "Classification", "Loop", "LoopLabError", "MagmaTable",
    "isomorphic", "translations", "two_sided_inverse", "validate",
]
__version__ = "0.1.0"
