"""Stoimenow matchings, their pattern classes, and the maps to posets, sequences and permutations."""

from .errors import StoimenowError
from .matchings import Matching, is_stoimenow, matching_stats, parse_matching, stoimenow_matchings
from .patterns import NAMED, P1, P2, P3, P4, P5, Pattern, avoiders, avoids, build_family, contains, pattern_by_name
from .posets import Poset, canonical_form, enumerate_posets, omega, parse_poset
from .sequences import enumerate_ascent_sequences, enumerate_fishburn, lambda_
from .series import Series, distribution_polynomial

__all__ = [
    "StoimenowError", "Matching", "is_stoimenow", "matching_stats", "parse_matching",
    "stoimenow_matchings", "NAMED", "P1", "P2", "P3", "P4", "P5", "Pattern", "avoiders", "avoids",
    "build_family", "contains", "pattern_by_name", "Poset", "canonical_form", "enumerate_posets",
    "omega", "parse_poset", "enumerate_ascent_sequences", "enumerate_fishburn", "lambda_",
    "Series", "distribution_polynomial",
]
__version__ = "0.1.0"
