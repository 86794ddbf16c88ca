"""
Result types of the Drazin engine.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..algebra import AlgebraElement
from ..errors import StructuralError


@dataclass(frozen=True)
class PDrazinResult:
    """The p-Drazin inverse of an element together with its indices.

    Attributes:
        inverse: a^‡ (equal to the Drazin inverse in finite dimension)
        drazin_index: Smallest k >= 0 with rank(a^k) = rank(a^(k+1))
        radical_index: Smallest k >= 1 with a^k a^Π in the Jacobson radical
        spectral_idempotent: a^Π = 1 - a a^‡
        axiom_residuals: Relative residuals of the three axioms measured on creation
    """

    inverse: AlgebraElement
    drazin_index: int
    radical_index: int
    spectral_idempotent: AlgebraElement
    axiom_residuals: Dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation contract for the infinite series appearing in sum formulas.

    `max_terms=None` means rep_dim + 1 for the context the series lives in.
    """

    max_terms: Optional[int] = None
    term_tol: float = 1e-14

    def __post_init__(self) -> None:
        if self.max_terms is not None and (
            isinstance(self.max_terms, bool) or not isinstance(self.max_terms, int)
        ):
            raise StructuralError(
                f"max_terms must be an integer, got {self.max_terms!r}"
            )
        if self.max_terms is not None and self.max_terms < 1:
            raise StructuralError(f"max_terms must be >= 1, got {self.max_terms}")
        if not self.term_tol >= 0.0:
            raise StructuralError(f"term_tol must be nonnegative, got {self.term_tol}")

    def resolve_max_terms(self, rep_dim: int) -> int:
        return self.max_terms if self.max_terms is not None else rep_dim + 1

    def to_dict(self) -> Dict[str, object]:
        return {"max_terms": self.max_terms, "term_tol": self.term_tol}


DEFAULT_POLICY = SeriesPolicy()


@dataclass(frozen=True)
class QuasinilpotenceReport:
    """Diagnostics for the ||a^n||^(1/n) -> 0 criterion.

    `root_sequence[i]` is ||a^(i+1)||^(1/(i+1)) for i < rep_dim.
    """

    is_quasinilpotent: bool
    root_sequence: List[float]
    final_norm: float

    def to_dict(self) -> Dict[str, object]:
        return {
            "is_quasinilpotent": self.is_quasinilpotent,
            "root_sequence": list(self.root_sequence),
            "final_norm": self.final_norm,
        }
