"""Brute-force generators of the combinatorial objects behind H^f and E^f."""

from .core import Enumeration, Histogram
from .cycles import (
    enum_a_t_cycle_tuples,
    enum_f_stirling_perm_tuples,
    enum_hrel_cycle_tuples,
    enum_r_stirling_perm_tuples,
)
from .partitions import enum_f_stirling_partitions, enum_r_stirling_partitions
from .sequences import enum_monomial_sequences, enum_ordered_sequences, s_lambda_k

__all__ = [
    "Enumeration",
    "Histogram",
    "enum_a_t_cycle_tuples",
    "enum_f_stirling_partitions",
    "enum_f_stirling_perm_tuples",
    "enum_hrel_cycle_tuples",
    "enum_monomial_sequences",
    "enum_ordered_sequences",
    "enum_r_stirling_partitions",
    "enum_r_stirling_perm_tuples",
    "s_lambda_k",
]
