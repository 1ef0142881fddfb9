"""Exact coordinate-ring computations for cones over O(n), SO(2m) and Sp(2m)."""

from .groebner import GroebnerBasis, buchberger, leading_ideal, monomial_quotient_hilbert
from .hilbert import cone_dim, h_G, hilbert_series, uxu_series
from .kernels import BACKEND
from .labels import GroupId, UnsupportedGroup, dim_irrep, enum_labels
from .series import IntSeries, RationalFunction, find_rational, koszul_obstruction, reconstruct_rational

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GroebnerBasis",
    "GroupId",
    "IntSeries",
    "RationalFunction",
    "UnsupportedGroup",
    "buchberger",
    "cone_dim",
    "dim_irrep",
    "enum_labels",
    "find_rational",
    "h_G",
    "hilbert_series",
    "koszul_obstruction",
    "leading_ideal",
    "monomial_quotient_hilbert",
    "reconstruct_rational",
    "uxu_series",
]
