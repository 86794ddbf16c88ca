"""Tests for QSettings-backed configuration, validation, migration and logging setup."""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Iterator

import pytest
from PySide6.QtCore import QSettings

from pdrazin.drazin.models import SeriesPolicy
from pdrazin.settings import AppSettings
from pdrazin.settings.tolerances import ENV_TOL_ACC
from pdrazin.settings.types import ConfigError, ConfigVersion
from pdrazin.tolerances import DEFAULT_TOLERANCES
from pdrazin.utils import CSVFormatter, setup_logging

OWN_HANDLERS = (
    logging.NullHandler,
    logging.StreamHandler,
    logging.handlers.RotatingFileHandler,
)


@pytest.fixture
def settings(settings_file: Path) -> AppSettings:
    return AppSettings(settings_file=settings_file)


@pytest.fixture
def restore_logging() -> Iterator[None]:
    """Drop the handlers setup_logging installs; pytest re-attaches its own."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in list(root.handlers):
        if type(handler) in OWN_HANDLERS:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)
    logging.captureWarnings(False)


class TestTolerances:
    def test_defaults(self, settings: AppSettings) -> None:
        assert settings.effective_tolerances == DEFAULT_TOLERANCES

    def test_persisted(self, settings_file: Path) -> None:
        AppSettings(settings_file=settings_file).tolerances.set("tol_acc", 1e-6)
        reopened = AppSettings(settings_file=settings_file)
        assert reopened.tolerances.get("tol_acc") == pytest.approx(1e-6)
        assert reopened.effective_tolerances.tol_acc == pytest.approx(1e-6)

    @pytest.mark.parametrize("value", [0.0, -1e-9, float("nan"), float("inf")])
    def test_invalid_values_refused(self, settings: AppSettings, value: float) -> None:
        settings.tolerances.set("tol_res", value)
        assert settings.tolerances.get("tol_res") == DEFAULT_TOLERANCES.tol_res

    def test_unknown_name(self, settings: AppSettings) -> None:
        with pytest.raises(KeyError):
            settings.tolerances.get("tol_everything")

    def test_reset(self, settings: AppSettings) -> None:
        settings.tolerances.set("tol_rad", 1e-7)
        settings.tolerances.reset()
        assert settings.tolerances.stored()["tol_rad"] is None

    def test_profiles_are_separate(self, settings_file: Path) -> None:
        AppSettings("strict", settings_file).tolerances.set("tol_acc", 1e-12)
        assert AppSettings("default", settings_file).effective_tolerances == (
            DEFAULT_TOLERANCES
        )


class TestEnvironmentOverride:
    def test_env_wins_over_store(
        self, settings: AppSettings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        settings.tolerances.set("tol_acc", 1e-6)
        monkeypatch.setenv(ENV_TOL_ACC, "1e-5")
        assert settings.effective_tolerances.tol_acc == 1e-5
        # never written back
        assert settings.tolerances.get("tol_acc") == pytest.approx(1e-6)

    @pytest.mark.parametrize("raw", ["abc", "-1", "0", "nan", " "])
    def test_unusable_env_ignored(
        self, settings: AppSettings, monkeypatch: pytest.MonkeyPatch, raw: str
    ) -> None:
        monkeypatch.setenv(ENV_TOL_ACC, raw)
        assert settings.tolerances.env_tol_acc is None
        assert settings.effective_tolerances.tol_acc == DEFAULT_TOLERANCES.tol_acc


class TestSeriesAndFuzz:
    def test_series_defaults(self, settings: AppSettings) -> None:
        assert settings.series_policy == SeriesPolicy()

    def test_series_values(self, settings: AppSettings) -> None:
        settings.series.max_terms = 12
        settings.series.term_tol = 1e-12
        assert settings.series_policy == SeriesPolicy(max_terms=12, term_tol=1e-12)
        settings.series.max_terms = None
        assert settings.series.max_terms is None

    def test_series_invalid_refused(self, settings: AppSettings) -> None:
        settings.series.max_terms = 0
        settings.series.max_terms = 2.5  # type: ignore[assignment]
        settings.series.term_tol = -1.0
        assert settings.series_policy == SeriesPolicy()

    def test_fuzz_values(self, settings: AppSettings, tmp_path: Path) -> None:
        assert settings.fuzz.workers == 4
        assert settings.fuzz.counterexample_dir == Path("fuzz-failures")
        settings.fuzz.workers = 0
        assert settings.fuzz.workers == 4
        settings.fuzz.workers = 2
        settings.fuzz.counterexample_dir = tmp_path / "cex"
        assert settings.fuzz.workers == 2
        assert settings.fuzz.counterexample_dir == tmp_path / "cex"


class TestValidation:
    def test_defaults_valid(self, settings: AppSettings) -> None:
        result = settings.validate()
        assert result.is_valid
        assert result.errors == []

    def test_unparsable_tolerance(self, settings_file: Path) -> None:
        raw = QSettings(str(settings_file), QSettings.Format.IniFormat)
        raw.setValue("default/tolerances/tol_res", "tiny")
        raw.sync()
        result = AppSettings(settings_file=settings_file).validate()
        assert not result.is_valid
        assert any("tol_res" in e for e in result.errors)

    def test_acceptance_above_rejection(self, settings: AppSettings) -> None:
        settings.tolerances.set("tol_acc", 1e-3)
        result = settings.validate()
        assert not result.is_valid
        assert any("hypothesis_reject" in e for e in result.errors)

    def test_require_valid(self, settings: AppSettings) -> None:
        assert settings.require_valid().is_valid
        settings.tolerances.set("tol_acc", 1e-3)
        with pytest.raises(ConfigError, match="hypothesis_reject") as info:
            settings.require_valid()
        assert info.value.errors == settings.validate().errors

    def test_strict_tol_acc_warns(
        self, settings: AppSettings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv(ENV_TOL_ACC, "1e-12")
        result = settings.validate()
        assert result.is_valid
        assert any(ENV_TOL_ACC in w for w in result.warnings)


class TestMigration:
    def test_new_store_gets_current_version(self, settings: AppSettings) -> None:
        assert settings.version == ConfigVersion.CURRENT.value

    def test_unversioned_store_migrated(self, settings_file: Path) -> None:
        raw = QSettings(str(settings_file), QSettings.Format.IniFormat)
        raw.setValue("default/tolerances/tol", "1e-7")
        raw.setValue("default/tolerances/tol_rad", "1e-8")
        raw.sync()
        del raw

        settings = AppSettings(settings_file=settings_file)
        assert settings.version == "1.1"
        assert settings.tolerances.get("tol_res") == pytest.approx(1e-7)
        # an explicit 1.0 value is kept
        assert settings.tolerances.get("tol_rad") == pytest.approx(1e-8)
        assert not settings.settings.contains("tolerances/tol")
        assert settings.settings.value("app/migrated_from") == "1.0"


class TestLoggingSetup:
    def test_silent_by_default(
        self, settings: AppSettings, restore_logging: None
    ) -> None:
        setup_logging(settings)
        handlers = logging.getLogger().handlers
        assert len(handlers) == 1
        assert isinstance(handlers[0], logging.NullHandler)

    def test_verbose_console(self, settings: AppSettings, restore_logging: None) -> None:
        setup_logging(settings, verbose=True)
        handlers = logging.getLogger().handlers
        assert len(handlers) == 1
        assert handlers[0].level == logging.DEBUG

    def test_file_logging(
        self,
        settings: AppSettings,
        restore_logging: None,
        tmp_path: Path,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        monkeypatch.chdir(tmp_path)
        settings.logging.file_logging = True
        setup_logging(settings)
        logging.getLogger("pdrazin.test").info('value "quoted"')
        for handler in logging.getLogger().handlers:
            handler.flush()
        text = (tmp_path / settings.logging.log_file_path).read_text(encoding="utf-8")
        assert '"pdrazin.test"' in text
        assert 'value ""quoted""' in text

    def test_invalid_console_level_refused(self, settings: AppSettings) -> None:
        settings.logging.console_log_level = "LOUD"
        assert settings.logging.console_log_level == "INFO"
        settings.logging.console_log_level = "debug"
        assert settings.logging.console_log_level == "DEBUG"

    def test_csv_formatter_includes_exception(self) -> None:
        try:
            raise ValueError("boom")
        except ValueError:
            record = logging.LogRecord(
                "pdrazin", logging.ERROR, __file__, 1, "failed", None, sys.exc_info()
            )
        line = CSVFormatter().format(record)
        assert line.startswith('"')
        assert "ValueError: boom" in line
