"""
Resources for pdrazin.

Golden instance files shipped with the package.
"""

from importlib import resources as importlib_resources
from pathlib import Path
from typing import List

INSTANCE_DIR = "instances"


def instance_names() -> List[str]:
    """Names (without .json) of the shipped instance files."""
    root = importlib_resources.files(__name__) / INSTANCE_DIR
    return sorted(
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def instance_path(name: str) -> Path:
    """Filesystem path of a shipped instance file."""
    path = Path(str(importlib_resources.files(__name__) / INSTANCE_DIR / f"{name}.json"))
    if not path.exists():
        raise FileNotFoundError(f"No shipped instance named '{name}'")
    return path
