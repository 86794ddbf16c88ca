"""
Instance file model: an algebra, named elements and optional parameters.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ..algebra import AlgebraContext, AlgebraElement
from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from ..errors import InstanceFileError
from ..identities.models import LambdaPair
from ..tolerances import DEFAULT_TOLERANCES, Tolerances


@dataclass
class InstanceFile:
    """The unit of CLI input and output.

    Attributes:
        context: Algebra every element belongs to
        elements: Named elements ("a", "b" for pair identities, "a1".."an" for n-ary ones)
        lam: λ for λ-commuting identities
        policy: Series policy overrides (max_terms, term_tol)
        tolerances: Tolerance overrides by field name
        n: Exponent override for the power identities
        identity: Identity tag the instance was generated for, if any
        seed: Generator seed the instance was built from, if any
    """

    context: AlgebraContext
    elements: Dict[str, AlgebraElement] = field(default_factory=dict)
    lam: Optional[complex] = None
    policy: Dict[str, Any] = field(default_factory=dict)
    tolerances: Dict[str, float] = field(default_factory=dict)
    n: Optional[int] = None
    identity: Optional[str] = None
    seed: Optional[int] = None

    def element(self, name: str) -> AlgebraElement:
        try:
            return self.elements[name]
        except KeyError:
            raise InstanceFileError(
                f"Instance has no element '{name}' (available: {sorted(self.elements)})"
            ) from None

    def require(self, names: Sequence[str]) -> List[AlgebraElement]:
        """Return the named elements, failing with every missing name at once."""
        missing = [name for name in names if name not in self.elements]
        if missing:
            raise InstanceFileError(
                "Instance is missing required elements",
                [f"missing element '{name}'" for name in missing],
            )
        return [self.elements[name] for name in names]

    def numbered(self, prefix: str = "a") -> List[AlgebraElement]:
        """Elements a1, a2, ... in order, stopping at the first gap."""
        result = []
        i = 1
        while f"{prefix}{i}" in self.elements:
            result.append(self.elements[f"{prefix}{i}"])
            i += 1
        if not result:
            raise InstanceFileError(f"Instance has no elements {prefix}1..{prefix}n")
        return result

    def require_lambda(self) -> complex:
        if self.lam is None:
            raise InstanceFileError("Instance has no 'lambda' but the identity needs one")
        return self.lam

    def lambda_pair(self) -> LambdaPair:
        a, b = self.require(["a", "b"])
        return LambdaPair(a, b, self.require_lambda())

    def series_policy(self, base: SeriesPolicy = DEFAULT_POLICY) -> SeriesPolicy:
        return SeriesPolicy(
            max_terms=self.policy.get("max_terms", base.max_terms),
            term_tol=float(self.policy.get("term_tol", base.term_tol)),
        )

    def resolve_tolerances(self, base: Tolerances = DEFAULT_TOLERANCES) -> Tolerances:
        return base.with_overrides(**self.tolerances)
