"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import json
import pathlib

import pytest

from bindweaver.config import BuildConfig, default_config

TESTS_DIR = pathlib.Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
GOLDEN_DIR = TESTS_DIR / "golden"


def read_golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def graph_json(concepts: list[dict], models: list[dict]) -> str:
    return json.dumps({"concepts": concepts, "models": models})


def full_config() -> BuildConfig:
    """A validated configuration with every built-in module enabled."""
    c = default_config()
    for short in c.enabled:
        c.enabled[short] = True
    c.selections["TRI2"]["name"] = "delaunay"
    c.selections["TRI3"]["name"] = "delaunay"
    return c


@pytest.fixture
def segment_graph_text() -> str:
    return (DATA_DIR / "segment" / "concepts.json").read_text(encoding="utf-8")


@pytest.fixture
def bezier_graph_text() -> str:
    return (DATA_DIR / "bezier" / "concepts.json").read_text(encoding="utf-8")
