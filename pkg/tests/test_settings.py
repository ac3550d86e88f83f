"""Unit tests for the settings service and tolerances."""

import json
import logging

import pytest
from testfixtures import LogCapture

from skewlab.mixins import ConfigFoldersMixin
from skewlab.settings import SettingsService, Tolerances, get_tolerances


@pytest.fixture
def settings_file(tmp_path, monkeypatch):
    """Point the settings service at a temporary settings file."""
    path = tmp_path / "settings.json"
    monkeypatch.setattr(SettingsService, "SETTINGS_PATH", path)
    monkeypatch.delenv(SettingsService.THREADS_ENV, raising=False)
    return path


class TestConfigFoldersMixin:
    """Test cases for ConfigFoldersMixin."""

    def test_shipped_settings_exist(self):
        """Test the packaged settings file is where the mixin says."""
        assert ConfigFoldersMixin.SETTINGS_PATH.exists()
        assert ConfigFoldersMixin.SETTINGS_PATH.parent == ConfigFoldersMixin.ETC_DIR

    def test_shipped_settings_match_defaults(self):
        """Test the packaged tolerances equal the compiled defaults."""
        with ConfigFoldersMixin.SETTINGS_PATH.open(encoding="utf-8") as f:
            data = json.load(f)
        assert Tolerances(**data["tolerances"]) == Tolerances()
        assert data["threads"] == 1


class TestTolerances:
    """Test cases for Tolerances."""

    def test_slack_tolerance_has_absolute_floor(self):
        """Test small sides use the absolute floor."""
        assert Tolerances().slack_tolerance(0.0, 1e-6) == 1e-12

    def test_slack_tolerance_scales_with_sides(self):
        """Test large sides use the relative tolerance."""
        assert Tolerances().slack_tolerance(-10.0, 2.0) == pytest.approx(1e-8)

    def test_agree(self):
        """Test path agreement is relative with an absolute floor."""
        tol = Tolerances()
        assert tol.agree(1.0, 1.0 + 5e-10)
        assert not tol.agree(1.0, 1.0 + 5e-9)
        assert tol.agree(0.0, 5e-13)
        assert tol.agree(1j, 1j)

    def test_is_frozen(self):
        """Test tolerances cannot be modified."""
        with pytest.raises(AttributeError):
            Tolerances().trace = 1.0  # type: ignore[misc]


class TestSettingsService:
    """Test cases for SettingsService."""

    def test_missing_file_gives_defaults(self, settings_file):
        """Test a missing file falls back to compiled defaults."""
        service = SettingsService()
        assert service.settings == {}
        assert service.tolerances() == Tolerances()
        assert service.threads() == 1

    def test_reads_tolerances(self, settings_file):
        """Test configured tolerances override the defaults."""
        settings_file.write_text(json.dumps({"tolerances": {"trace": 1e-6}}))
        tolerances = SettingsService().tolerances()
        assert tolerances.trace == 1e-6
        assert tolerances.hermitian == Tolerances().hermitian

    def test_ignores_non_numeric_tolerance(self, settings_file):
        """Test non-numeric tolerances are skipped with a warning."""
        settings_file.write_text(
            json.dumps({"tolerances": {"trace": "tiny", "hermitian": True}})
        )
        with LogCapture(level=logging.WARNING) as capture:
            tolerances = SettingsService().tolerances()
        assert tolerances == Tolerances()
        assert len(capture.records) == 2
        messages = [record.getMessage() for record in capture.records]
        assert any("trace='tiny'" in message for message in messages)

    def test_malformed_file_warns(self, settings_file):
        """Test an unparsable file is ignored with a warning."""
        settings_file.write_text("{not json")
        with LogCapture(level=logging.WARNING) as capture:
            assert SettingsService().settings == {}
        assert "using defaults" in capture.records[0].getMessage()

    def test_non_object_file_is_ignored(self, settings_file):
        """Test a JSON value that is not an object is ignored."""
        settings_file.write_text("[1, 2]")
        with LogCapture(level=logging.WARNING):
            assert SettingsService().settings == {}

    def test_threads_from_settings(self, settings_file):
        """Test the thread count is read from the settings file."""
        settings_file.write_text(json.dumps({"threads": 3}))
        assert SettingsService().threads() == 3

    def test_threads_env_beats_settings(self, settings_file, monkeypatch):
        """Test the environment variable overrides the settings file."""
        settings_file.write_text(json.dumps({"threads": 3}))
        monkeypatch.setenv(SettingsService.THREADS_ENV, "5")
        assert SettingsService().threads() == 5

    def test_threads_override_beats_env(self, settings_file, monkeypatch):
        """Test an explicit override wins over everything."""
        monkeypatch.setenv(SettingsService.THREADS_ENV, "5")
        assert SettingsService().threads(2) == 2

    @pytest.mark.parametrize("value", ["0", "-3", "many"])
    def test_invalid_env_is_ignored(self, settings_file, monkeypatch, value):
        """Test a non-positive or non-integer env value is ignored with a warning."""
        monkeypatch.setenv(SettingsService.THREADS_ENV, value)
        with LogCapture(level=logging.WARNING) as capture:
            assert SettingsService().threads() == 1
        capture.check(
            (
                "skewlab.settings",
                "WARNING",
                f"Ignoring SKEWLAB_THREADS={value!r}: not a positive int",
            )
        )


class TestGetTolerances:
    """Test cases for get_tolerances()."""

    def test_is_cached(self):
        """Test the same instance is returned every time."""
        assert get_tolerances() is get_tolerances()
