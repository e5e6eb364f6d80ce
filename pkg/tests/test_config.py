from __future__ import annotations

import json
from pathlib import Path

import pytest

from realclass.config import (
    CAP_ENV,
    DATA_DIR,
    PROJECT_ROOT,
    apply_env,
    config_from_mapping,
    load_config,
    resolve,
)


def test_shipped_defaults(cfg):
    assert cfg.element_cap == 1_000_000
    assert cfg.normal_subgroup_cap == 512
    assert cfg.jobs == 1
    assert cfg.corpus_manifest == DATA_DIR / "corpus.json"
    assert cfg.group_dir == DATA_DIR / "groups"
    assert cfg.corpus_manifest.exists()


def test_resolve():
    assert resolve(PROJECT_ROOT, "./realclass/data") == (PROJECT_ROOT / "realclass" / "data").resolve()
    assert resolve(PROJECT_ROOT, "/tmp/x.json") == Path("/tmp/x.json")


def test_config_from_mapping():
    cfg = config_from_mapping({"element_cap": "2000", "group_budget_seconds": None, "log_level": "debug"})
    assert cfg.element_cap == 2000
    assert cfg.group_budget_seconds is None
    assert cfg.log_level == "DEBUG"
    with pytest.raises(ValueError):
        config_from_mapping({"jobs": 0})


def test_env_override(cfg):
    assert apply_env(cfg, {CAP_ENV: "5000"}).element_cap == 5000
    assert apply_env(cfg, {}).element_cap == cfg.element_cap
    assert apply_env(cfg, {CAP_ENV: ""}) == cfg
    with pytest.raises(ValueError) as exc:
        apply_env(cfg, {CAP_ENV: "lots"})
    assert CAP_ENV in str(exc.value)
    with pytest.raises(ValueError):
        apply_env(cfg, {CAP_ENV: "-3"})


def test_load_config_from_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"element_cap": 99, "jobs": 4}), encoding="utf-8")
    cfg = load_config(path, env={CAP_ENV: "123"})
    assert cfg.element_cap == 123
    assert cfg.jobs == 4


def test_missing_config(tmp_path):
    with pytest.raises(FileNotFoundError) as exc:
        load_config(tmp_path / "config.json", env={})
    assert "config.json" in str(exc.value)
