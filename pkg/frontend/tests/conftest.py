"""Fixtures: generated stub trees produced through the generator CLI."""

from __future__ import annotations

import pathlib
import shutil
import subprocess

import pytest

TESTS_DIR = pathlib.Path(__file__).parent
GOLDEN_DIR = TESTS_DIR / "golden"

GENERATOR = "bindweaver"

CONFIG_TEXT = "CGALPY_ARRANGEMENT_ON_SURFACE_2_BINDINGS=true\n"


@pytest.fixture(scope="session")
def generated_stub_dir(tmp_path_factory) -> pathlib.Path:
    """Stubs produced by one real generator run; tests copy before mutating."""
    if shutil.which(GENERATOR) is None:
        pytest.skip(f"{GENERATOR} CLI not installed")
    root = tmp_path_factory.mktemp("generated")
    config = root / "build.cfg"
    config.write_text(CONFIG_TEXT, encoding="utf-8")
    out = root / "out"
    proc = subprocess.run(
        [GENERATOR, "generate", "--config", str(config),
         "--out", str(out), "--stubs-only"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return out / "stubs"


@pytest.fixture
def mutable_stub_dir(generated_stub_dir, tmp_path) -> pathlib.Path:
    target = tmp_path / "stubs"
    shutil.copytree(generated_stub_dir, target)
    return target
