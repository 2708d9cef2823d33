"""Exact Stirling-type numbers as specializations of symmetric functions.

f(x) = (x + a_1)...(x + a_r) turns complete and elementary symmetric
functions into the triangles H^f_{j,n} = h_{n-j}(f(1), ..., f(j)) and
E^f_{j,n} = e_{n-j}(f(1), ..., f(n-1)).  f = x gives the Stirling numbers of
both kinds, f = x(x+z) the Jacobi-Stirling numbers and f = x(x+1) the
Legendre-Stirling numbers.
"""

from .algebra import ShiftPoly, UniPoly
from .errors import FStirlingError, GuardError, InvariantError, ModeError, UsageError
from .family import (
    E_f,
    H_f,
    ShiftVector,
    TriangleTable,
    build_triangle,
    named_triangle,
    q_E,
    q_H,
    symbolic_E,
    symbolic_H,
)
from .symfunc import a_t, complete, elementary, h_rel_t, h_rel_t_bar, monomial

__version__ = "0.1.0"

__all__ = [
    "E_f",
    "FStirlingError",
    "GuardError",
    "H_f",
    "InvariantError",
    "ModeError",
    "ShiftPoly",
    "ShiftVector",
    "TriangleTable",
    "UniPoly",
    "UsageError",
    "a_t",
    "build_triangle",
    "complete",
    "elementary",
    "h_rel_t",
    "h_rel_t_bar",
    "monomial",
    "named_triangle",
    "q_E",
    "q_H",
    "symbolic_E",
    "symbolic_H",
]
