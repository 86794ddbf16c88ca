"""
Verification report model shared by the engine, the identity suite and the CLI.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

# Residual categories, in report order
HYPOTHESIS = "hypothesis"
FORMULA = "formula"
AXIOM = "axiom"
IDENTITY = "identity"
CATEGORIES = (HYPOTHESIS, FORMULA, AXIOM, IDENTITY)


@dataclass(frozen=True)
class ResidualCheck:
    """One graded residual.

    `relation` is "<=" for the usual "residual within tolerance" check and ">"
    for checks that require a residual to stay clearly away from zero.
    """

    residual: float
    tolerance: float
    relation: str = "<="

    @property
    def passed(self) -> bool:
        if self.relation == ">":
            return self.residual > self.tolerance
        return self.residual <= self.tolerance


@dataclass
class VerificationReport:
    """Residuals of one identity evaluation with the tolerances they were graded against."""

    identity: str
    context: str = ""
    checks: Dict[str, Dict[str, ResidualCheck]] = field(
        default_factory=lambda: {c: {} for c in CATEGORIES}
    )
    series_terms: Dict[str, int] = field(default_factory=dict)
    documentation: Dict[str, float] = field(default_factory=dict)
    marginal_hypotheses: List[str] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    error: Optional[str] = None

    def record(
        self,
        category: str,
        name: str,
        residual: float,
        tolerance: float,
        relation: str = "<=",
    ) -> ResidualCheck:
        check = ResidualCheck(float(residual), float(tolerance), relation)
        self.checks[category][name] = check
        return check

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        """Copy every entry of `other` into this report, optionally prefixing names."""
        for category, entries in other.checks.items():
            for name, check in entries.items():
                self.checks[category][prefix + name] = check
        for name, terms in other.series_terms.items():
            self.series_terms[prefix + name] = terms
        for name, value in other.documentation.items():
            self.documentation[prefix + name] = value
        self.marginal_hypotheses.extend(prefix + h for h in other.marginal_hypotheses)
        self.skipped.extend(prefix + s for s in other.skipped)

    # === DERIVED FIELDS ===

    @property
    def passed(self) -> bool:
        if self.error is not None:
            return False
        return all(
            c.passed for entries in self.checks.values() for c in entries.values()
        )

    @property
    def hypothesis_residuals(self) -> Dict[str, float]:
        return {k: c.residual for k, c in self.checks[HYPOTHESIS].items()}

    @property
    def axiom_residuals(self) -> Dict[str, float]:
        return {k: c.residual for k, c in self.checks[AXIOM].items()}

    @property
    def identity_residuals(self) -> Dict[str, float]:
        return {k: c.residual for k, c in self.checks[IDENTITY].items()}

    @property
    def formula_residuals(self) -> Dict[str, float]:
        return {k: c.residual for k, c in self.checks[FORMULA].items()}

    @property
    def formula_residual(self) -> Optional[float]:
        """Largest formula-vs-oracle residual, or None without an oracle comparison."""
        values = list(self.formula_residuals.values())
        return max(values) if values else None

    @property
    def tolerances_used(self) -> Dict[str, float]:
        return {
            f"{category}.{name}": check.tolerance
            for category, entries in self.checks.items()
            for name, check in entries.items()
        }

    def failures(self) -> List[str]:
        return [
            f"{category}.{name}"
            for category, entries in self.checks.items()
            for name, check in entries.items()
            if not check.passed
        ]

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dictionary; every residual appears with its tolerance."""
        relations = {
            f"{category}.{name}": check.relation
            for category, entries in self.checks.items()
            for name, check in entries.items()
            if check.relation != "<="
        }
        return {
            "identity": self.identity,
            "context": self.context,
            "pass": self.passed,
            "formula_residual": self.formula_residual,
            "formula_residuals": self.formula_residuals,
            "hypothesis_residuals": self.hypothesis_residuals,
            "axiom_residuals": self.axiom_residuals,
            "identity_residuals": self.identity_residuals,
            "series_terms": dict(self.series_terms),
            "tolerances_used": self.tolerances_used,
            "relations": relations,
            "documentation": dict(self.documentation),
            "marginal_hypotheses": list(self.marginal_hypotheses),
            "skipped": list(self.skipped),
            "error": self.error,
        }
