import sys
from pathlib import Path

import pytest

# Add repository root to path for imports
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))


@pytest.fixture
def write_scene(tmp_path):
    """Write scene text to a temporary file and return its path as a string."""
    def _write(text: str, name: str = "scene.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def config_file(tmp_path, monkeypatch):
    """Point CONFIG_PATH at a temporary config.yaml built from the given text."""
    def _config(text: str) -> Path:
        path = tmp_path / "config.yaml"
        path.write_text(text, encoding="utf-8")
        monkeypatch.setenv("CONFIG_PATH", str(path))
        return path
    return _config
