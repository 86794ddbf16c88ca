"""
Settings package for pdrazin.

A modular, type-safe configuration layer over Qt's QSettings (QtCore only).

Usage:
    from pdrazin.settings import AppSettings

    settings = AppSettings(settings_file="pdrazin.ini")
    tolerances = settings.effective_tolerances
"""

from .core import AppSettings
from .fuzz import FuzzSettings
from .logging import LoggingSettings
from .series import SeriesSettings
from .tolerances import ENV_TOL_ACC, ToleranceSettings
from .types import ConfigError, ConfigVersion, ValidationResult

__all__ = [
    "AppSettings",
    "ConfigError",
    "ConfigVersion",
    "ENV_TOL_ACC",
    "FuzzSettings",
    "LoggingSettings",
    "SeriesSettings",
    "ToleranceSettings",
    "ValidationResult",
]
