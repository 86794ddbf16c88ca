"""
Series truncation settings for pdrazin.
"""

import logging
import math
from typing import Optional

from ..drazin.models import DEFAULT_POLICY, SeriesPolicy
from .types import SettingsGroup

logger = logging.getLogger(__name__)


class SeriesSettings(SettingsGroup):
    """Manages the default SeriesPolicy."""

    @property
    def term_tol(self) -> float:
        return self._get_float("series/term_tol", DEFAULT_POLICY.term_tol)

    @term_tol.setter
    def term_tol(self, value: float) -> None:
        if not math.isfinite(value) or value < 0:
            logger.warning(f"Invalid term_tol: {value}, keeping current: {self.term_tol}")
            return
        self._set("series/term_tol", float(value))

    @property
    def max_terms(self) -> Optional[int]:
        """Stored term limit; None means rep_dim + 1 (stored as 0)."""
        value = self._get_int("series/max_terms", 0)
        return value if value > 0 else None

    @max_terms.setter
    def max_terms(self, value: Optional[int]) -> None:
        if value is not None and (
            isinstance(value, bool) or not isinstance(value, int) or value < 1
        ):
            logger.warning(
                f"Invalid max_terms: {value}, keeping current: {self.max_terms}"
            )
            return
        self._set("series/max_terms", 0 if value is None else int(value))

    @property
    def policy(self) -> SeriesPolicy:
        term_tol = self.term_tol
        if not math.isfinite(term_tol) or term_tol < 0:
            term_tol = DEFAULT_POLICY.term_tol
        return SeriesPolicy(max_terms=self.max_terms, term_tol=term_tol)
