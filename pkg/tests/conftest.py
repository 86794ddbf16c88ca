"""Pytest configuration and shared fixtures."""

import sys
from pathlib import Path
from typing import Callable, List

import numpy as np
import pytest

# Add the project sources to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from pdrazin.algebra import AlgebraContext  # noqa: E402
from pdrazin.resources import instance_path  # noqa: E402


def all_contexts(n: int = 4) -> List[AlgebraContext]:
    """One context of every kind, all with representation size n."""
    return [
        AlgebraContext.full_matrix(n),
        AlgebraContext.upper_triangular(n),
        AlgebraContext.truncated_polynomial(n),
        AlgebraContext.from_kind("sum", n),
    ]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def golden() -> Callable[[str], Path]:
    """Path of a shipped golden instance file by name."""
    return instance_path


@pytest.fixture
def settings_file(tmp_path: Path) -> Path:
    """An empty INI settings file, so tests never touch the user store."""
    path = tmp_path / "pdrazin.ini"
    path.write_text("", encoding="utf-8")
    return path


@pytest.fixture(autouse=True)
def _no_env_tolerance(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("PDRAZIN_TOL_ACC", raising=False)
