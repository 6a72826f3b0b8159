"""Exact computations with the fundamental invariant of the Hecke algebra H_n(q)."""

from .casimir import casimir_eigenvalue, decode_blocks, decode_spectrum
from .characters import character_table, class_character, projection_coefficients, reduce_word_trace
from .diagrams import (
    Partition,
    chains_of,
    dimension,
    fundamental_eigenvalue,
    partitions_of,
    reconstruct_from_eigenvalue,
)
from .laurent import DeltaSeries, LaurentPoly, RationalFunction
from .murphy import murphy_product_trace, murphy_trace

__version__ = "0.1.0"

__all__ = [
    "DeltaSeries",
    "LaurentPoly",
    "Partition",
    "RationalFunction",
    "casimir_eigenvalue",
    "chains_of",
    "character_table",
    "class_character",
    "decode_blocks",
    "decode_spectrum",
    "dimension",
    "fundamental_eigenvalue",
    "murphy_product_trace",
    "murphy_trace",
    "partitions_of",
    "projection_coefficients",
    "reconstruct_from_eigenvalue",
    "reduce_word_trace",
]
