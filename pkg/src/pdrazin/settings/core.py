"""
Core settings management for pdrazin.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from PySide6.QtCore import QSettings

from ..drazin.models import SeriesPolicy
from ..tolerances import Tolerances
from .fuzz import FuzzSettings
from .logging import LoggingSettings
from .migration import SettingsMigrator
from .series import SeriesSettings
from .tolerances import ToleranceSettings
from .types import ConfigError, ConfigVersion, ValidationResult
from .validation import SettingsValidator

logger = logging.getLogger(__name__)


class AppSettings:
    """
    Configuration management using QSettings.

    Provides type-safe access to tolerances, series policy, fuzz defaults and
    logging options, stored per profile either in the platform-native location
    or in an explicit INI file.
    """

    def __init__(
        self,
        profile: str = "default",
        settings_file: Optional[Union[str, Path]] = None,
    ):
        """Open the settings store.

        Args:
            profile: Settings profile name (default: "default")
            settings_file: INI file to use instead of the native store
        """
        if settings_file is not None:
            self.settings = QSettings(str(settings_file), QSettings.Format.IniFormat)
        else:
            self.settings = QSettings("pdrazin", "pdrazin")
        self.profile = profile

        # Use profile as a group: pdrazin/<profile>/...
        self.settings.beginGroup(profile)

        self._migrator = SettingsMigrator(self.settings)
        self._validator = SettingsValidator(self)
        self._tolerances = ToleranceSettings(self.settings)
        self._series = SeriesSettings(self.settings)
        self._fuzz = FuzzSettings(self.settings)
        self._logging = LoggingSettings(self.settings)

        self._migrator.ensure_version()

        logger.debug(
            f"Settings initialized for profile '{profile}', "
            f"stored at: {self.settings.fileName()}"
        )

    # === SUBSYSTEM ACCESS ===

    @property
    def tolerances(self) -> ToleranceSettings:
        return self._tolerances

    @property
    def series(self) -> SeriesSettings:
        return self._series

    @property
    def fuzz(self) -> FuzzSettings:
        return self._fuzz

    @property
    def logging(self) -> LoggingSettings:
        return self._logging

    # === EFFECTIVE VALUES ===

    @property
    def effective_tolerances(self) -> Tolerances:
        """Tolerances after the environment override."""
        return self._tolerances.tolerances

    @property
    def series_policy(self) -> SeriesPolicy:
        return self._series.policy

    @property
    def version(self) -> str:
        return str(self.settings.value("app/version", ConfigVersion.CURRENT.value))

    # === VALIDATION ===

    def validate(self) -> ValidationResult:
        """Validate current configuration."""
        return self._validator.validate()

    def require_valid(self) -> ValidationResult:
        """Validate and raise ConfigError listing every error when invalid."""
        result = self.validate()
        if not result.is_valid:
            raise ConfigError(
                f"Invalid configuration in {self.get_settings_file_path()}",
                result.errors,
            )
        return result

    # === UTILITY METHODS ===

    def get_settings_file_path(self) -> str:
        """Get the file path where settings are stored."""
        return self.settings.fileName()

    def sync(self) -> None:
        """Force synchronization of settings to storage."""
        self.settings.sync()
