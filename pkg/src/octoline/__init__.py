"""Octonion algebra, the ten-dimensional vector/spinor correspondence,
nested Lorentz sandwiches, fractional-linear maps on the octonionic
projective line, and candidate automorphism forms, with an independent
brute-force oracle layer and a verification command line."""

from .core import (
    BASIS_UNITS,
    BasisUnit,
    INFINITY,
    Infinity,
    KERNEL_BACKEND,
    Octonion,
    REAL_SPAN,
    associator,
    cd_join,
    cd_split,
    conj,
    conj_antiautomorphism_check,
    exp,
    inner,
    inverse,
    mul,
    norm,
    spans_complex_subalgebra,
    unit_index,
    unit_name,
)
from .errors import OctolineError
from .minkowski import HermitianMatrix, Spinor, Vector10, null_factor
from .lorentz import NestedChain, TransformMatrix, apply_vector, apply_spinor
from .moebius import MoebiusParams, OP1Point
from .g2 import AutomorphismForm, ConformalParams, NestedForm, apply_gt

__version__ = "0.1.0"

__all__ = [
    "BASIS_UNITS",
    "BasisUnit",
    "INFINITY",
    "Infinity",
    "KERNEL_BACKEND",
    "Octonion",
    "REAL_SPAN",
    "associator",
    "cd_join",
    "cd_split",
    "conj",
    "conj_antiautomorphism_check",
    "exp",
    "inner",
    "inverse",
    "mul",
    "norm",
    "spans_complex_subalgebra",
    "unit_index",
    "unit_name",
    "OctolineError",
    "HermitianMatrix",
    "Spinor",
    "Vector10",
    "null_factor",
    "NestedChain",
    "TransformMatrix",
    "apply_vector",
    "apply_spinor",
    "MoebiusParams",
    "OP1Point",
    "AutomorphismForm",
    "ConformalParams",
    "NestedForm",
    "apply_gt",
    "__version__",
]
