"""Exact transition matrices for higher-level q-deformed Fock spaces."""

from .laurent import LaurentPoly
from .partitions import Multipartition, Partition
from .charge import Multicharge, enumerate_multipartitions, precedes, tau, tau_inv
from .wedge import KERNEL, matrix_A
from .jantzen import Ordering, matrix_J
from .canonical import matrix_Delta, verify_A_identity, verify_Delta_identity

__version__ = "0.1.0"

__all__ = [
    "KERNEL",
    "LaurentPoly",
    "Multicharge",
    "Multipartition",
    "Ordering",
    "Partition",
    "__version__",
    "enumerate_multipartitions",
    "matrix_A",
    "matrix_Delta",
    "matrix_J",
    "precedes",
    "tau",
    "tau_inv",
    "verify_A_identity",
    "verify_Delta_identity",
]
