"""Bicomplex and hyperbolic scalar algebra with certificate-grade geometry.

The package provides exact arithmetic for the commutative ring BC and its
hyperbolic subalgebra D, finite-dimensional D-/BC-modules, hyperbolic-valued
convex geometry (gauges, separation), and desk-scale verifiers for the
classical theorems in that setting.  Run ``bicomplex verify`` for the
property-test suites.
"""

from .backend import BACKENDS, EPSILON, EXACT, FLOAT
from .errors import BicomplexError
from .order import OrderResult, compare, inf_d, is_d_bounded, is_positive, le, lt_strict, sup_d
from .scalars import (
    BicomplexScalar,
    ComplexScalar,
    ConjugationKind,
    HyperbolicScalar,
    bc_from_w,
    bc_inverse,
    bc_mul,
    conjugate,
    dnorm_k,
    dnorm_k_sq,
    is_zero_divisor,
    modulus,
)
from .vectors import BCVector, DVector

__version__ = "0.1.0"

__all__ = [
    "BACKENDS",
    "BCVector",
    "BicomplexError",
    "BicomplexScalar",
    "ComplexScalar",
    "ConjugationKind",
    "DVector",
    "EPSILON",
    "EXACT",
    "FLOAT",
    "HyperbolicScalar",
    "OrderResult",
    "bc_from_w",
    "bc_inverse",
    "bc_mul",
    "compare",
    "conjugate",
    "dnorm_k",
    "dnorm_k_sq",
    "inf_d",
    "is_d_bounded",
    "is_positive",
    "is_zero_divisor",
    "le",
    "lt_strict",
    "modulus",
    "sup_d",
    "__version__",
]
