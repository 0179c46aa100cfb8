"""Invariants of graph C*-algebras with finitely many ideals.

Finite T0 spaces and their canonical ``n.a.t`` signatures, a census of
tempered spaces, exact integer linear algebra, filtered K-theory of finite
graphs, and the classification-status table for up to four points.
"""

from ._kernels import BACKEND
from .errors import (
    ConditionKError,
    CycleError,
    DisconnectedError,
    NonCommutingError,
    NonIntegralError,
    NotExactError,
    NotLocallyClosedError,
    NotNestedError,
    ParseError,
    ShapeMismatchError,
    TemperedKitError,
    UnknownSignatureError,
)
from .poset import Poset, TemperedPoset, from_cover_relations
from .signature import Signature, canonical_signature, classify_shape, parse_signature, space_signature

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConditionKError",
    "CycleError",
    "DisconnectedError",
    "NonCommutingError",
    "NonIntegralError",
    "NotExactError",
    "NotLocallyClosedError",
    "NotNestedError",
    "ParseError",
    "Poset",
    "ShapeMismatchError",
    "Signature",
    "TemperedKitError",
    "TemperedPoset",
    "UnknownSignatureError",
    "canonical_signature",
    "classify_shape",
    "from_cover_relations",
    "parse_signature",
    "space_signature",
]
