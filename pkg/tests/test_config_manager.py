import json

import pytest

from lib import paths
from lib.components.config_manager import DEFAULT_SECTIONS, ConfigManager, SettingsError


@pytest.fixture
def settings_path(tmp_path):
    return str(tmp_path / "settings" / ".ruledlab.json")


def test_defaults_when_the_file_is_missing(logger, settings_path):
    manager = ConfigManager(logger, settings_path)
    assert manager.config == DEFAULT_SECTIONS
    assert manager.value("bounds", "C") == "10"
    assert manager.value("bounds", "q") is None
    assert manager.value("lab", "output_dir") == "./outputs"
    assert manager.value("nope", "key") is None


def test_partial_files_are_completed(logger, settings_path, tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"bounds": {"C": "5"}, "flecnode": "broken"}))
    manager = ConfigManager(logger, str(path))
    assert manager.value("bounds", "C") == "5"
    assert manager.value("bounds", "precision_bits") == 64
    assert manager.get("flecnode") == {"max_degree": 6}


def test_wrong_types_fall_back_to_defaults(logger, tmp_path):
    path = tmp_path / "typed.json"
    path.write_text(json.dumps({"lemmas": {"probe_lines": "many"}, "logging": {"level": "LOUD"}, "bounds": {"q": 7}}))
    manager = ConfigManager(logger, str(path))
    assert manager.value("lemmas", "probe_lines") == 100
    assert manager.value("logging", "level") == "INFO"
    assert manager.value("bounds", "q") == 7


def test_save_and_reload(logger, settings_path):
    manager = ConfigManager(logger, settings_path)
    manager.config["lab"]["default_seed"] = 42
    assert manager.save_config()
    again = ConfigManager(logger, settings_path)
    assert again.value("lab", "default_seed") == 42


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_invalid_files_raise(logger, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(SettingsError):
        ConfigManager(logger, str(path))


def test_missing_schema_skips_type_checks(logger, tmp_path):
    path = tmp_path / "typed.json"
    path.write_text(json.dumps({"lemmas": {"probe_lines": "many"}}))
    manager = ConfigManager(logger, str(path), schema_path=str(tmp_path / "absent.json"))
    assert manager.value("lemmas", "probe_lines") == "many"


def test_relative_paths_resolve_inside_the_data_dir(monkeypatch, tmp_path):
    monkeypatch.setattr(paths, "DATA_DIR", str(tmp_path))
    assert paths.resolve("./outputs", "fallback") == str(tmp_path / "outputs")
    assert paths.resolve("/abs/out", "fallback") == "/abs/out"
    assert paths.resolve(None, "fallback") == "fallback"
