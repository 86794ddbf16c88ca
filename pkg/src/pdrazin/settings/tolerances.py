"""
Tolerance settings for pdrazin.
"""

import logging
import math
import os
from typing import Dict, Optional

from ..tolerances import DEFAULT_TOLERANCES, Tolerances
from .types import SettingsGroup

logger = logging.getLogger(__name__)

# Overrides tol_acc at read time; never written back to the store
ENV_TOL_ACC = "PDRAZIN_TOL_ACC"

TOLERANCE_NAMES = tuple(DEFAULT_TOLERANCES.to_dict())


class ToleranceSettings(SettingsGroup):
    """Manages the numerical tolerances every computation is graded with."""

    def get(self, name: str) -> float:
        """Stored value of one tolerance (default when unset)."""
        self._check_name(name)
        return self._get_float(f"tolerances/{name}", getattr(DEFAULT_TOLERANCES, name))

    def set(self, name: str, value: float) -> None:
        """Store one tolerance; non-finite or non-positive values are refused."""
        self._check_name(name)
        if not math.isfinite(value) or value <= 0:
            logger.warning(
                f"Invalid tolerance {name}={value}, keeping current: {self.get(name)}"
            )
            return
        self._set(f"tolerances/{name}", float(value))

    def reset(self) -> None:
        """Forget every stored tolerance."""
        self.settings.remove("tolerances")
        self.settings.sync()

    def stored(self) -> Dict[str, Optional[object]]:
        """Raw stored values, unparsed (None when unset)."""
        return {name: self._raw(f"tolerances/{name}") for name in TOLERANCE_NAMES}

    @property
    def env_tol_acc(self) -> Optional[float]:
        """tol_acc from the environment, if set to a usable value."""
        raw = os.environ.get(ENV_TOL_ACC)
        if raw is None or not raw.strip():
            return None
        try:
            value = float(raw)
        except ValueError:
            logger.warning(f"Ignoring {ENV_TOL_ACC}={raw!r}: not a number")
            return None
        if not math.isfinite(value) or value <= 0:
            logger.warning(f"Ignoring {ENV_TOL_ACC}={raw!r}: must be positive")
            return None
        return value

    @property
    def tolerances(self) -> Tolerances:
        """Effective tolerances: stored values, then the environment override."""
        values = {name: self.get(name) for name in TOLERANCE_NAMES}
        env = self.env_tol_acc
        if env is not None:
            logger.debug(f"tol_acc overridden from {ENV_TOL_ACC}: {env:g}")
            values["tol_acc"] = env
        return Tolerances(**values)

    @staticmethod
    def _check_name(name: str) -> None:
        if name not in TOLERANCE_NAMES:
            raise KeyError(f"unknown tolerance '{name}'")
