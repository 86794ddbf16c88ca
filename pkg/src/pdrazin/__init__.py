"""
pdrazin: Drazin, group and pseudo-Drazin inverses in finite-dimensional
Banach algebras.

Computes the inverses with a definition-checked oracle and implements, verifies
and fuzzes the additive and product formulas for commuting, orthogonal and
λ-commuting elements.
"""

__version__ = "0.1.0"
__author__ = "pdrazin Contributors"

from .algebra import AlgebraContext, AlgebraElement, ContextKind
from .drazin import (
    PDrazinResult,
    SeriesPolicy,
    drazin_index,
    drazin_inverse,
    group_inverse,
    pdrazin,
)
from .errors import (
    GeneratorError,
    HypothesisError,
    InstanceFileError,
    InternalConsistencyError,
    MarginalHypothesisWarning,
    NotGroupInvertibleError,
    PDrazinError,
    SeriesDivergenceError,
    StructuralError,
)
from .instances import InstanceFile, InstanceLoader
from .reports import VerificationReport
from .tolerances import DEFAULT_TOLERANCES, Tolerances
from .verification import verify

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "ContextKind",
    "DEFAULT_TOLERANCES",
    "GeneratorError",
    "HypothesisError",
    "InstanceFile",
    "InstanceFileError",
    "InstanceLoader",
    "InternalConsistencyError",
    "MarginalHypothesisWarning",
    "NotGroupInvertibleError",
    "PDrazinError",
    "PDrazinResult",
    "SeriesDivergenceError",
    "SeriesPolicy",
    "StructuralError",
    "Tolerances",
    "VerificationReport",
    "drazin_index",
    "drazin_inverse",
    "group_inverse",
    "pdrazin",
    "verify",
]
