"""Determinants of matrices built from Jacobi symbols of quadratic forms."""

from .arith import jacobi, is_prime
from .detengine import det, det_bareiss, det_mod, det_modular
from .matrixgen import Atom, Family, MatrixSpec, build_numeric, chapman_matrix, decompose, family, parse_spec
from .multiaffine import MultiAffinePoly, det_poly, evaluate, interpolate, multiaffinity_guard
from .quadfield import QuadInt, QuadInvariants, invariants

__all__ = [
    "Atom", "Family", "MatrixSpec", "MultiAffinePoly", "QuadInt", "QuadInvariants",
    "build_numeric", "chapman_matrix", "decompose", "det", "det_bareiss", "det_mod",
    "det_modular", "det_poly", "evaluate", "family", "interpolate", "invariants",
    "is_prime", "jacobi", "multiaffinity_guard", "parse_spec",
]
