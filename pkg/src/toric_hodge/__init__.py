"""Exact line-bundle cohomology and Hodge-ideal vanishing checks on smooth complete toric varieties."""

from ._kernels import BACKEND
from .cohomology import cohomology_dims, euler_characteristic, hodge_diagonal
from .divisors import DivisorClass, TDivisor, canonical_divisor, class_of, picard_group
from .fan import Fan, build_standard, hirzebruch, projective_product, projective_space
from .positivity import is_ample, is_nef
from .vanishing import QDivisorData, satisfies_pk, verify_theorem_a_trivial_ideal

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DivisorClass", "Fan", "QDivisorData", "TDivisor", "build_standard",
    "canonical_divisor", "class_of", "cohomology_dims", "euler_characteristic",
    "hirzebruch", "hodge_diagonal", "is_ample", "is_nef", "picard_group",
    "projective_product", "projective_space", "satisfies_pk", "verify_theorem_a_trivial_ideal",
]
