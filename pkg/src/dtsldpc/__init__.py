"""LDPC convolutional codes from difference triangle sets."""

from __future__ import annotations

from .analysis import analyze, column_distance, free_distance
from .bounds import certify
from .construction import CodeDescriptor, build_base, full_sliding, sliding, to_polynomial, window
from .cycles import audit_minors, enumerate_cycles, girth
from .dts import DifferenceTriangleSet, search_min_scope, validate
from .field import FieldMatrix, FiniteField, make_field
from .kernels import IMPLEMENTATION

__version__ = "0.1.0"

__all__ = [
    "CodeDescriptor",
    "DifferenceTriangleSet",
    "FieldMatrix",
    "FiniteField",
    "IMPLEMENTATION",
    "analyze",
    "audit_minors",
    "build_base",
    "certify",
    "column_distance",
    "enumerate_cycles",
    "free_distance",
    "full_sliding",
    "girth",
    "make_field",
    "search_min_scope",
    "sliding",
    "to_polynomial",
    "validate",
    "window",
]
