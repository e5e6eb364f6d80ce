from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = PROJECT_ROOT / "realclass" / "data"
DEFAULT_CONFIG_PATH = DATA_DIR / "config.json"

CAP_ENV = "REALCLASS_CAP"


@dataclass(frozen=True)
class AppConfig:
    project_root: Path
    element_cap: int = 1_000_000
    normal_subgroup_cap: int = 512
    group_budget_seconds: float | None = 120.0
    jobs: int = 1
    corpus_manifest: Path = DATA_DIR / "corpus.json"
    group_dir: Path = DATA_DIR / "groups"
    log_level: str = "INFO"


def resolve(root: Path, p: str) -> Path:
    """
    Resolve a path from config.json.
    - Absolute paths are returned as-is.
    - Relative paths are resolved relative to repo root.
    - Leading "./" is stripped.
    """
    p = p.strip()
    if p.startswith("./"):
        p = p[2:]
    if Path(p).is_absolute():
        return Path(p)
    return (root / p).resolve()


def _positive_int(value: Any, what: str) -> int:
    try:
        n = int(str(value).strip())
    except ValueError:
        raise ValueError(f"{what} must be a positive integer, got {value!r}") from None
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {value!r}")
    return n


def load_runtime_config_json(path: Path) -> dict[str, Any]:
    data = json.loads(path.read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"Unexpected JSON root type in {path}: {type(data).__name__}")
    return data


def config_from_mapping(data: Mapping[str, Any], root: Path = PROJECT_ROOT) -> AppConfig:
    cfg = AppConfig(project_root=root)
    budget = data.get("group_budget_seconds", cfg.group_budget_seconds)
    return AppConfig(
        project_root=root,
        element_cap=_positive_int(data.get("element_cap", cfg.element_cap), "element_cap"),
        normal_subgroup_cap=_positive_int(data.get("normal_subgroup_cap", cfg.normal_subgroup_cap), "normal_subgroup_cap"),
        group_budget_seconds=None if budget is None else float(budget),
        jobs=_positive_int(data.get("jobs", cfg.jobs), "jobs"),
        corpus_manifest=resolve(root, str(data.get("corpus_manifest", "realclass/data/corpus.json"))),
        group_dir=resolve(root, str(data.get("group_dir", "realclass/data/groups"))),
        log_level=str(data.get("log_level", cfg.log_level)).upper(),
    )


def apply_env(cfg: AppConfig, env: Mapping[str, str] | None = None) -> AppConfig:
    env = os.environ if env is None else env
    raw = env.get(CAP_ENV)
    if raw is None or raw == "":
        return cfg
    return replace(cfg, element_cap=_positive_int(raw, CAP_ENV))


def load_config(path: Path | None = None, env: Mapping[str, str] | None = None) -> AppConfig:
    path = DEFAULT_CONFIG_PATH if path is None else path
    if not path.exists():
        raise FileNotFoundError(f"Missing config.json: {path}")
    return apply_env(config_from_mapping(load_runtime_config_json(path)), env)
