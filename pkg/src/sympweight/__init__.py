"""Exact weight multiplicities for bivariate representations of sp(2r, C)."""
from .combinatorics import binom, bounded_count_dp, bounded_count_sieve, enumerate_subsums
from .multiplicity import (
    DiagramRecord,
    dim_irrep,
    mult_irrep,
    mult_irrep_via_virtual,
    mult_sym,
    mult_tensor,
    weight_diagram,
)
from .weights import dominant_rep, enumerate_dominant_weights, layer_index, orbit_size

__version__ = "0.1.0"

__all__ = [
    "binom",
    "bounded_count_dp",
    "bounded_count_sieve",
    "enumerate_subsums",
    "DiagramRecord",
    "dim_irrep",
    "mult_irrep",
    "mult_irrep_via_virtual",
    "mult_sym",
    "mult_tensor",
    "weight_diagram",
    "dominant_rep",
    "enumerate_dominant_weights",
    "layer_index",
    "orbit_size",
]
