from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, List

from corpus.families import FamilyParameterError, family
from corpus.group_file import ingest
from realclass.config import AppConfig
from realclass.models import GroupSpec

logger = logging.getLogger(__name__)


def _entry_params(entry: dict[str, Any]) -> List[List[int]]:
    if "params" in entry:
        return [list(p) for p in entry["params"]]
    if "range" in entry:
        start, stop, step = (list(entry["range"]) + [1])[:3]
        return [[v] for v in range(start, stop + 1, step)]
    raise ValueError(f"Manifest entry needs `params` or `range`: {entry}")


def _nested(token: Any) -> GroupSpec:
    name, *params = token
    if name == "direct_product":
        return family(name, *(_nested(p) for p in params))
    return family(name, *params)


def expand_manifest(path: Path) -> List[GroupSpec]:
    if not path.exists():
        raise FileNotFoundError(f"Missing corpus manifest: {path}")
    data = json.loads(path.read_text(encoding="utf-8"))
    specs: List[GroupSpec] = []
    for entry in data.get("families", []):
        name = entry["family"]
        if name == "direct_product":
            for a, b in entry["factors"]:
                specs.append(family(name, _nested(a), _nested(b)))
            continue
        for params in _entry_params(entry):
            try:
                specs.append(family(name, *params))
            except FamilyParameterError as e:
                raise ValueError(f"Invalid manifest entry {name}{params}: {e}") from None
    return specs


def load_group_dir(group_dir: Path) -> List[GroupSpec]:
    specs: List[GroupSpec] = []
    for path in sorted(Path(group_dir).glob("*.txt")):
        specs.extend(ingest(path))
    return specs


def _unique(specs: List[GroupSpec]) -> List[GroupSpec]:
    seen: set[str] = set()
    for s in specs:
        if s.name in seen:
            raise ValueError(f"Duplicate group name in corpus: {s.name}")
        seen.add(s.name)
    return specs


def builtin_corpus(cfg: AppConfig) -> List[GroupSpec]:
    """The manifest grid plus every shipped group file, in that order."""
    specs = _unique(expand_manifest(cfg.corpus_manifest) + load_group_dir(cfg.group_dir))
    logger.info("Built-in corpus: %d groups", len(specs))
    return specs


def load_corpus(where: str | None, cfg: AppConfig) -> List[GroupSpec]:
    """`builtin` (or nothing) for the shipped corpus, else a directory of group files or one file."""
    if where is None or where == "builtin":
        return builtin_corpus(cfg)
    path = Path(where)
    if path.is_dir():
        specs = _unique(load_group_dir(path))
    elif path.is_file():
        specs = ingest(path)
    else:
        raise FileNotFoundError(f"No corpus at {path}")
    logger.info("Corpus %s: %d groups", path, len(specs))
    return specs
