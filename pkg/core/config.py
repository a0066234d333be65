"""Configuration loading from config.yaml"""

import os
from pathlib import Path

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.yaml"


def load_config() -> dict:
    """Load configuration from config.yaml (CONFIG_PATH overrides the location)"""
    config_path = Path(os.environ.get("CONFIG_PATH", DEFAULT_CONFIG_PATH))
    if not config_path.exists():
        return {}
    with open(config_path) as f:
        return yaml.safe_load(f) or {}


def load_section(name: str) -> dict:
    """Load one top-level section, empty when absent"""
    return load_config().get(name) or {}
