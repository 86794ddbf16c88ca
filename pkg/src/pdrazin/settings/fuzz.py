"""
Fuzz run defaults for pdrazin.
"""

import logging
from pathlib import Path

from .types import SettingsGroup

logger = logging.getLogger(__name__)

DEFAULT_WORKERS = 4
DEFAULT_COUNTEREXAMPLE_DIR = "fuzz-failures"


class FuzzSettings(SettingsGroup):
    """Manages worker count and the counterexample directory."""

    @property
    def workers(self) -> int:
        return self._get_int("fuzz/workers", DEFAULT_WORKERS)

    @workers.setter
    def workers(self, value: int) -> None:
        if value < 1:
            logger.warning(f"Invalid worker count: {value}, keeping current: {self.workers}")
            return
        self._set("fuzz/workers", int(value))

    @property
    def counterexample_dir(self) -> Path:
        return Path(self._get_str("fuzz/counterexample_dir", DEFAULT_COUNTEREXAMPLE_DIR))

    @counterexample_dir.setter
    def counterexample_dir(self, value: Path) -> None:
        self._set("fuzz/counterexample_dir", str(value))
