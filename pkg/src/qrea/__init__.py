"""Quantized Hermitian matrices: exact identity suites for the reflection
equation algebra and numerical construction/classification of its
Hilbert-space representations."""

__version__ = "0.1.0"

from . import braid, classify, gtrep, hrep, ncalg, scalars  # noqa: F401
from .classify import ExtendedSignature, admissible_roots, canonical_weight, ext_signature
from .gtrep import HWModule, HWModuleSpec, build_hw_module, eps_adapted, gt_norm
from .hrep import (
    HermitianRep,
    adjoint_transport_T,
    adjoint_transport_U,
    build_bigcell_rep,
    n2_family,
    spectral_data,
    verify_rep,
)
from .ncalg import NCPoly, central_sigma, identity_suite, is_zero_rea, leading_minor_Z
from .scalars import LaurentScalar, laurent, qpow

__all__ = [
    "__version__",
    "LaurentScalar", "laurent", "qpow",
    "NCPoly", "central_sigma", "leading_minor_Z", "is_zero_rea", "identity_suite",
    "HWModuleSpec", "HWModule", "build_hw_module", "eps_adapted", "gt_norm",
    "HermitianRep", "build_bigcell_rep", "n2_family", "verify_rep", "spectral_data",
    "adjoint_transport_T", "adjoint_transport_U",
    "ExtendedSignature", "admissible_roots", "ext_signature", "canonical_weight",
]
