"""Location of the shipped data files (scripts, star graphs, ledger).

All verification inputs are data, not code, so reviewers can diff them.
The compiled-in default is the package's own ``data`` directory; the
``DATA_DIR`` environment variable overrides it.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path


def data_dir() -> Path:
    override = os.environ.get("DATA_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files("cycpres") / "data"))


def data_path(*parts: str) -> Path:
    return data_dir().joinpath(*parts)
