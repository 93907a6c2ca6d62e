"""Tests for diagmon.core.settings."""

import pytest
from pydantic import ValidationError

from diagmon.core.settings import FORMAT_ENV_VAR, Settings


class TestSettings:
    def test_singleton(self):
        assert Settings() is Settings()
        assert Settings().limits.max_elements == 2_000_000
        assert Settings().output_format == "text"

    def test_custom_config(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("limits:\n  word_cap: 9\noutput:\n  format: csv\n", encoding="utf-8")
        settings = Settings(path)
        assert settings.limits.word_cap == 9
        assert settings.limits.max_bell_degree == 5
        assert settings.output_format == "csv"

    def test_format_from_environment(self, monkeypatch):
        monkeypatch.setenv(FORMAT_ENV_VAR, "json")
        assert Settings().output_format == "json"

    def test_override_and_reset(self):
        Settings.override(max_elements=10, word_cap=None)
        assert Settings().limits.max_elements == 10
        assert Settings().limits.word_cap == 12
        Settings.reset()
        assert Settings().limits.max_elements == 2_000_000

    def test_override_is_validated(self):
        with pytest.raises(ValidationError):
            Settings.override(max_elements=0)


class TestFailedLoad:
    def test_missing_file_leaves_no_instance(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            Settings(tmp_path / "absent.yaml")
        assert Settings.instance is None
        assert Settings().limits.word_cap == 12

    def test_invalid_values_leave_no_instance(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("limits:\n  max_elements: -4\n", encoding="utf-8")
        with pytest.raises(ValidationError):
            Settings(path)
        assert Settings.instance is None

    def test_invalid_format_from_environment(self, monkeypatch):
        monkeypatch.setenv(FORMAT_ENV_VAR, "xml")
        with pytest.raises(ValidationError):
            Settings()
        assert Settings.instance is None
        monkeypatch.delenv(FORMAT_ENV_VAR)
        assert Settings().output_format == "text"
