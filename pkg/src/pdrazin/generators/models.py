"""
Random instance specification.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..algebra import AlgebraContext
from ..errors import GeneratorError

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class RandomSpec:
    """Seeded request for a random instance.

    Attributes:
        seed: 64-bit unsigned seed; identical specs give bit-identical instances
        context: Algebra the instance lives in
        target_index: Requested Drazin index (of `a` for pair generators)
        lam: λ for λ-commuting pairs
    """

    seed: int
    context: AlgebraContext
    target_index: int = 0
    lam: Optional[complex] = None

    def __post_init__(self) -> None:
        if not 0 <= int(self.seed) <= MAX_SEED:
            raise GeneratorError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )
        if not 0 <= self.target_index <= self.context.rep_dim:
            raise GeneratorError(
                f"target index {self.target_index} outside 0..{self.context.rep_dim} "
                f"for {self.context.describe()}"
            )
        if self.lam is not None:
            object.__setattr__(self, "lam", complex(self.lam))
            if self.lam == 0:
                raise GeneratorError("λ must be nonzero")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(int(self.seed))

    def require_lambda(self) -> complex:
        if self.lam is None:
            raise GeneratorError("this instance kind needs λ")
        return self.lam
