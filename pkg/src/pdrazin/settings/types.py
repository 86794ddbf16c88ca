"""
Configuration type definitions for pdrazin.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, List, Optional

if TYPE_CHECKING:
    from PySide6.QtCore import QSettings

logger = logging.getLogger(__name__)


class ConfigVersion(Enum):
    """Configuration version for migration support."""

    V1_0 = "1.0"
    V1_1 = "1.1"
    CURRENT = V1_1


class ConfigError(Exception):
    """Raised when the stored configuration fails validation."""

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        self.errors = list(errors or [])
        if self.errors:
            message = message + ":\n  - " + "\n  - ".join(self.errors)
        super().__init__(message)


@dataclass
class ValidationResult:
    """Result of configuration validation."""

    is_valid: bool
    errors: List[str]
    warnings: List[str]


class SettingsGroup:
    """Typed accessors shared by the settings subsystems.

    Values read back from an INI file are strings, so every getter parses
    and falls back to the default on anything unparsable.
    """

    def __init__(self, settings: "QSettings"):
        self.settings = settings

    def _raw(self, key: str) -> Optional[object]:
        return self.settings.value(key, None)

    def _get_str(self, key: str, default: str = "") -> str:
        value = self.settings.value(key, default)
        return str(value) if value is not None else default

    def _get_bool(self, key: str, default: bool = False) -> bool:
        value = self.settings.value(key, default)
        if isinstance(value, bool):
            return value
        if isinstance(value, str):
            return value.lower() in ("true", "1", "yes")
        return bool(value) if value is not None else default

    def _get_int(self, key: str, default: int = 0) -> int:
        value = self.settings.value(key, default)
        try:
            return int(str(value)) if value is not None else default
        except (ValueError, TypeError):
            logger.warning(f"Ignoring non-integer setting {key}={value!r}")
            return default

    def _get_float(self, key: str, default: float = 0.0) -> float:
        value = self.settings.value(key, default)
        try:
            return float(str(value)) if value is not None else default
        except (ValueError, TypeError):
            logger.warning(f"Ignoring non-numeric setting {key}={value!r}")
            return default

    def _set(self, key: str, value: object) -> None:
        self.settings.setValue(key, value)
        self.settings.sync()
