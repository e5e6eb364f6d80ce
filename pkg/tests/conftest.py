from __future__ import annotations

from pathlib import Path

import pytest

from corpus.families import build_group, family
from realclass.config import DATA_DIR, load_config
from realclass.perm import Group

GROUPS_DIR = DATA_DIR / "groups"


def make(name: str, *params) -> Group:
    return build_group(family(name, *params))


@pytest.fixture(scope="session")
def cfg():
    return load_config(env={})


@pytest.fixture(scope="session")
def groups_dir() -> Path:
    return GROUPS_DIR


@pytest.fixture(scope="session")
def sym3() -> Group:
    return make("symmetric", 3)


@pytest.fixture(scope="session")
def sym4() -> Group:
    return make("symmetric", 4)


@pytest.fixture(scope="session")
def alt4() -> Group:
    return make("alternating", 4)


@pytest.fixture(scope="session")
def alt5() -> Group:
    return make("alternating", 5)


@pytest.fixture(scope="session")
def q8() -> Group:
    return make("dicyclic", 8)


@pytest.fixture(scope="session")
def c4() -> Group:
    return make("cyclic", 4)


@pytest.fixture(scope="session")
def frob21() -> Group:
    return make("frobenius", 7, 3)
