"""
Numerical tolerances shared by every computational module.
"""

from dataclasses import dataclass, fields, replace
from typing import Any


@dataclass(frozen=True)
class Tolerances:
    """Immutable bundle of tolerances.

    Attributes:
        tol_res: Relative residual accepted for single products (axioms, hypotheses)
        tol_acc: Relative difference accepted between a formula and the oracle
        tol_rad: Relative distance accepted for Jacobson-radical membership
        tol_pattern: Relative size accepted on coordinates outside a context's pattern
        rank_rtol: Singular value threshold relative to the reference scale
        hypothesis_reject: Hypothesis residual at which a formula refuses to run
        separation: Lower bound a residual must reach to count as "clearly nonzero"
    """

    tol_res: float = 1e-9
    tol_acc: float = 1e-8
    tol_rad: float = 1e-9
    tol_pattern: float = 1e-9
    rank_rtol: float = 1e-12
    hypothesis_reject: float = 1e-4
    separation: float = 1e-2

    def with_overrides(self, **overrides: float) -> "Tolerances":
        """Return a copy with the given fields replaced (unknown names are ignored)."""
        known = {f.name for f in fields(self)}
        kept = {k: float(v) for k, v in overrides.items() if k in known}
        return replace(self, **kept)

    def to_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Tolerances":
        return DEFAULT_TOLERANCES.with_overrides(**data)


DEFAULT_TOLERANCES = Tolerances()
