"""
Drazin engine: the oracle every identity formula is compared against.
"""

from .axioms import (
    check_pdrazin_axioms,
    commutation_residual,
    inner_inverse_residual,
    radical_residual,
)
from .engine import (
    core_nilpotent_parts,
    drazin_index,
    drazin_inverse,
    group_inverse,
    is_quasinilpotent,
    pdrazin,
    quasinilpotence_report,
)
from .linalg import numerical_rank, pinv, spectral_norm
from .models import DEFAULT_POLICY, PDrazinResult, QuasinilpotenceReport, SeriesPolicy

__all__ = [
    "DEFAULT_POLICY",
    "PDrazinResult",
    "QuasinilpotenceReport",
    "SeriesPolicy",
    "check_pdrazin_axioms",
    "commutation_residual",
    "core_nilpotent_parts",
    "drazin_index",
    "drazin_inverse",
    "group_inverse",
    "inner_inverse_residual",
    "is_quasinilpotent",
    "numerical_rank",
    "pdrazin",
    "pinv",
    "quasinilpotence_report",
    "radical_residual",
    "spectral_norm",
]
