"""Exact computations with Bethe subalgebras of the Yangian Y(gl_n)."""
from .ncpoly import EPSILON, NcElement, normal_form, parse, pbw_basis, rtt_commutator, t
from .series import MatrixSeries, USeries, invert, invert_matrix, reflect_shift, shift
from .yangian import YangianContext, fused_tau, quantum_minor

__all__ = [
    "EPSILON", "NcElement", "normal_form", "parse", "pbw_basis", "rtt_commutator", "t",
    "MatrixSeries", "USeries", "invert", "invert_matrix", "reflect_shift", "shift",
    "YangianContext", "fused_tau", "quantum_minor",
]
