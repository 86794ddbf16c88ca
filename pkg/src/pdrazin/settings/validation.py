"""
Settings validation for pdrazin.
"""

import logging
import math
from typing import TYPE_CHECKING, List

from .tolerances import ENV_TOL_ACC
from .types import ValidationResult

if TYPE_CHECKING:
    from .core import AppSettings

logger = logging.getLogger(__name__)

# Tolerances that grade a pass; each must sit below the rejection threshold
ACCEPTANCE_TOLERANCES = ("tol_res", "tol_acc", "tol_rad", "tol_pattern")


class SettingsValidator:
    """Validates configuration settings."""

    def __init__(self, settings: "AppSettings"):
        self.settings = settings

    def validate(self) -> ValidationResult:
        """Validate current configuration."""
        errors: List[str] = []
        warnings: List[str] = []

        for name, raw in self.settings.tolerances.stored().items():
            if raw is None:
                continue
            try:
                value = float(str(raw))
            except ValueError:
                errors.append(f"Tolerance {name} is not a number: {raw!r}")
                continue
            if not math.isfinite(value) or value <= 0:
                errors.append(f"Tolerance {name} must be finite and positive: {raw}")

        tol = self.settings.tolerances.tolerances
        for name in ACCEPTANCE_TOLERANCES:
            value = getattr(tol, name)
            if value >= tol.hypothesis_reject:
                errors.append(
                    f"Tolerance {name}={value:g} must be below "
                    f"hypothesis_reject={tol.hypothesis_reject:g}"
                )
        if tol.tol_acc < tol.tol_res:
            source = f" (from {ENV_TOL_ACC})" if self.settings.tolerances.env_tol_acc else ""
            warnings.append(
                f"tol_acc={tol.tol_acc:g}{source} is below tol_res={tol.tol_res:g}; "
                "formula comparisons will be stricter than the oracle's own axioms"
            )

        if self.settings.series.term_tol < 0:
            errors.append(
                f"Series term_tol must be nonnegative: {self.settings.series.term_tol}"
            )
        if self.settings.fuzz.workers < 1:
            errors.append(f"Fuzz worker count must be >= 1: {self.settings.fuzz.workers}")

        return ValidationResult(
            is_valid=len(errors) == 0, errors=errors, warnings=warnings
        )
