"""
Concrete finite-dimensional Banach algebras and element arithmetic.
"""

from .models import AlgebraContext, AlgebraElement, ContextKind
from .operations import (
    add,
    assemble_direct_sum,
    coefficients,
    component,
    element,
    embed,
    from_coefficients,
    identity,
    is_radical,
    mul,
    norm,
    pattern_residual,
    power,
    project_to_pattern,
    radical_distance,
    radical_part,
    relative_difference,
    scale,
    snap_to_pattern,
    sub,
    validate_element,
    zero,
)

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "ContextKind",
    "add",
    "assemble_direct_sum",
    "coefficients",
    "component",
    "element",
    "embed",
    "from_coefficients",
    "identity",
    "is_radical",
    "mul",
    "norm",
    "pattern_residual",
    "power",
    "project_to_pattern",
    "radical_distance",
    "radical_part",
    "relative_difference",
    "scale",
    "snap_to_pattern",
    "sub",
    "validate_element",
    "zero",
]
