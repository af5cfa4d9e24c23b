import json

import pytest

from core.config_manager import ConfigManager, get_config, set_config


def test_defaults_without_file(tmp_path):
    config = ConfigManager(str(tmp_path / "absent.json"))
    assert config.l1_dimension_cap == 24
    assert config.codec_separation_divisor == 4
    assert config.codec_edit_separation_divisor == 8
    assert config.default_eps == pytest.approx(0.1)
    assert not (tmp_path / "absent.json").exists()
    assert config.validate() == (True, [])


def test_file_values_merge_with_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"threads": 3, "log_level": "debug"}), encoding="utf-8")
    config = ConfigManager(str(path))
    assert config.threads == 3
    assert config.log_level == "DEBUG"
    assert config.mask_chunk_size == 65536


def test_broken_file_falls_back(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("[1, 2", encoding="utf-8")
    assert ConfigManager(str(path)).config == ConfigManager.DEFAULT_CONFIG


def test_save_and_reload(tmp_path):
    path = tmp_path / "nested" / "config.json"
    config = ConfigManager(str(path))
    config.default_eps = 0.25
    assert config.save()
    assert ConfigManager(str(path)).default_eps == pytest.approx(0.25)


def test_setters_reject_bad_values(tmp_path):
    config = ConfigManager(str(tmp_path / "c.json"))
    with pytest.raises(ValueError):
        config.threads = -1
    with pytest.raises(ValueError):
        config.default_eps = 0


def test_validate_reports_problems(tmp_path):
    config = ConfigManager(str(tmp_path / "c.json"))
    config.set("l1_dimension_cap", 40)
    config.set("codec_edit_separation_divisor", 0)
    config.set("log_level", "loud")
    ok, errors = config.validate()
    assert not ok
    assert len(errors) == 3


def test_global_instance_is_replaceable(default_config):
    assert get_config() is default_config
    other = ConfigManager(str(default_config.config_path) + ".other")
    set_config(other)
    assert get_config() is other
