"""
Data models for the identity engine.
"""

from dataclasses import dataclass
from enum import Enum

from ..algebra import AlgebraElement
from ..errors import StructuralError


@dataclass(frozen=True)
class LambdaPair:
    """A pair with ab = λ ba for a nonzero complex λ.

    Construction only checks λ != 0 and a shared context; the λ-commutation
    itself is measured by the operations that rely on it.
    """

    a: AlgebraElement
    b: AlgebraElement
    lam: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", complex(self.lam))
        if self.lam == 0:
            raise StructuralError("λ must be nonzero")
        if self.a.context != self.b.context:
            raise StructuralError(
                f"Context mismatch: {self.a.context.describe()} vs {self.b.context.describe()}"
            )


@dataclass(frozen=True)
class SeriesEvaluation:
    """Partial sum of a terminating series and the number of terms it took."""

    value: AlgebraElement
    terms: int


@dataclass(frozen=True)
class CommutingSumTrace:
    """Intermediate values of the commuting-sum formula."""

    result: AlgebraElement
    one_plus_inverse: AlgebraElement
    series: AlgebraElement
    series_terms: int


@dataclass(frozen=True)
class SubLambdaTrace:
    """Intermediate values of the λ-commuting difference formula.

    Attributes:
        w: a a^‡ (a - b) b b^‡
        w_inverse: w^‡ from the oracle
        series_left_terms: Terms of Σ (b a^‡)^i b^Π
        series_right_terms: Terms of Σ (b^‡ a)^i a^Π b^‡
        result: The formula value for (a - b)^‡
    """

    w: AlgebraElement
    w_inverse: AlgebraElement
    series_left_terms: int
    series_right_terms: int
    result: AlgebraElement


class SpecialCase(Enum):
    """Hypothesis on `a` selecting a specialisation of the commuting-sum formula."""

    NILPOTENT = "nilpotent"
    INVERTIBLE = "invertible"
    GROUP = "group"


@dataclass(frozen=True)
class SpecializationTrace:
    """Corrected specialisation, the value of the printed closed form and series length."""

    case: SpecialCase
    result: AlgebraElement
    printed: AlgebraElement
    series_terms: int
