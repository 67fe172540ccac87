# infra/env.py

from __future__ import annotations

import functools
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv


@functools.lru_cache()
def ensure_env_loaded() -> None:
    """
    Load OPALG_* settings from <repo_root>/.env exactly once.

    The repo root is the parent of `infra/`, so the CLI behaves the same
    from any working directory. Variables already set in the process win.
    """
    repo_root = Path(__file__).resolve().parents[1]
    load_dotenv(dotenv_path=repo_root / ".env", override=False)


def env_setting(name: str, default: Optional[str] = None) -> Optional[str]:
    ensure_env_loaded()
    value = os.environ.get(name)
    return value if value else default
