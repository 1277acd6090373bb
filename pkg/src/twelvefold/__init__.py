"""Exact counting and listing of assemblages across the thirty-cell twelvefold grid."""

from .core import Assemblage, PopulationVector, Problem, Row, format_assemblage, parse_assemblage
from .enumeration import CapExceeded, enumerate_assemblages, oracle_count
from .formulas import count, count_via_column0_sum

__version__ = "0.1.0"

__all__ = [
    "Assemblage",
    "CapExceeded",
    "PopulationVector",
    "Problem",
    "Row",
    "count",
    "count_via_column0_sum",
    "enumerate_assemblages",
    "format_assemblage",
    "oracle_count",
    "parse_assemblage",
]
