import os

import pytest

from src.core.config import settings
from src.graph.graph import GraphSpec


@pytest.fixture(autouse=True)
def quiet_progress(monkeypatch):
    monkeypatch.setattr(settings, "SHOW_PROGRESS", False)


@pytest.fixture
def input_dir() -> str:
    return settings.INPUT_DATA_DIR


@pytest.fixture
def input_file(input_dir):
    def path(name: str) -> str:
        return os.path.join(input_dir, name)

    return path


@pytest.fixture
def shrikhande() -> GraphSpec:
    return GraphSpec.doob(1, 0)


@pytest.fixture
def ternary_plane() -> GraphSpec:
    return GraphSpec.hamming(2, 3)
