"""Mutually unbiased bases in prime dimension from the finite Heisenberg group."""

__version__ = "0.1.0"

from .zmod import Residue, is_prime  # noqa: E402
from .heisenberg import HeisenbergElement, p_matrix, q_matrix, realize  # noqa: E402
from .phasespace import ClassLabel, PhasePoint, SL2Matrix, act, class_of  # noqa: E402
from .unitary import coset_identify, d_matrix, phi_of, realize_sl2, sylvester  # noqa: E402
from .mub import (  # noqa: E402
    ComplexBasis,
    MubCollection,
    PhaseBasis,
    PhaseVector,
    build_formula_bases,
    build_operator_bases,
    exact_unbiased,
    unbiasedness_matrix,
)

__all__ = [
    "ClassLabel",
    "ComplexBasis",
    "HeisenbergElement",
    "MubCollection",
    "PhaseBasis",
    "PhasePoint",
    "PhaseVector",
    "Residue",
    "SL2Matrix",
    "act",
    "build_formula_bases",
    "build_operator_bases",
    "class_of",
    "coset_identify",
    "d_matrix",
    "exact_unbiased",
    "is_prime",
    "p_matrix",
    "phi_of",
    "q_matrix",
    "realize",
    "realize_sl2",
    "sylvester",
    "unbiasedness_matrix",
]
