"""Exact real topology of plane curves: Sturm sequences, CAD and Euler characteristics."""

from .cad import CADCell, CADComplex, cad_plane
from .euler import EulerError, EulerReport, SignatureTheoremReport, euler_rp2, is_nodal, verify_signature_theorem
from .univariate import RootInterval, isolate_roots, sturm_count

__all__ = [
    "CADCell",
    "CADComplex",
    "EulerError",
    "EulerReport",
    "RootInterval",
    "SignatureTheoremReport",
    "cad_plane",
    "euler_rp2",
    "is_nodal",
    "isolate_roots",
    "sturm_count",
    "verify_signature_theorem",
]
