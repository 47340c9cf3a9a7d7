"""Bundled example files."""
from pathlib import Path

DATA_DIR = Path(__file__).parent


def path(name: str) -> Path:
    p = DATA_DIR / name
    if not p.exists():
        raise FileNotFoundError(name)
    return p
