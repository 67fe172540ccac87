# core/run_config.py
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from core.errors import OpalgError
from core.orders import OrderKind

DEFAULT_BUDGET = 64

# -------- Bounds + run settings --------


@dataclass
class BoundsConfig:
    """
    Argument-word bounds for the bounded GS checker.

    pool_size >= 3: the composition cases need three independent words.
    """
    max_z_degree: int = 2
    max_l_degree: int = 2
    max_depth: int = 2
    pool_size: int = 3

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass
class RunConfig:
    """
    Settings shared by the CLI subcommands.

    Precedence when resolved by scripts/opalg.py:
      CLI flag > OPALG_* environment variable > config file > default here.
    """
    order: Optional[str] = None
    params: Dict[str, str] = field(default_factory=dict)
    budget: int = DEFAULT_BUDGET
    mode: str = "instance"
    output_format: str = "text"
    trace_file: Optional[str] = None
    bounds: BoundsConfig = field(default_factory=BoundsConfig)

    # Entire raw YAML/JSON, kept for keys newer than this loader
    raw: Dict[str, Any] = field(default_factory=dict)

    @property
    def order_kind(self) -> Optional[OrderKind]:
        return OrderKind.parse(self.order) if self.order else None

    # ---------- Environment overlay ----------

    def apply_env(self, environ: Optional[Dict[str, str]] = None) -> "RunConfig":
        env = os.environ if environ is None else environ
        if env.get("OPALG_BUDGET"):
            try:
                self.budget = int(env["OPALG_BUDGET"])
            except ValueError:
                raise OpalgError(f"OPALG_BUDGET must be an integer, got {env['OPALG_BUDGET']!r}") from None
        if env.get("OPALG_FORMAT"):
            self.output_format = env["OPALG_FORMAT"]
        if env.get("OPALG_TRACE_FILE"):
            self.trace_file = env["OPALG_TRACE_FILE"]
        return self

    # ---------- Loader from YAML/JSON ----------

    @staticmethod
    def load_from_file(path: Path) -> "RunConfig":
        """
        Load a RunConfig from a YAML or JSON file, e.g.

            order: qc
            params: {d: "3/5"}
            budget: 32
            bounds: {max_z_degree: 3, max_l_degree: 2, max_depth: 2, pool_size: 3}
        """
        import yaml  # type: ignore

        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        text = path.read_text(encoding="utf-8")
        if path.suffix.lower() in {".yaml", ".yml"}:
            data = yaml.safe_load(text) or {}
        else:
            data = json.loads(text)
        if not isinstance(data, dict):
            raise OpalgError(f"Config file {path} must hold a mapping at the top level")

        bounds_raw = data.get("bounds", {}) or {}
        known_bounds = {"max_z_degree", "max_l_degree", "max_depth", "pool_size"}
        unknown = set(bounds_raw) - known_bounds
        if unknown:
            raise OpalgError(f"Unknown bounds key(s) in {path}: {', '.join(sorted(unknown))}")

        return RunConfig(
            order=data.get("order"),
            params={str(k): str(v) for k, v in (data.get("params", {}) or {}).items()},
            budget=int(data.get("budget", DEFAULT_BUDGET)),
            mode=data.get("mode", "instance"),
            output_format=data.get("format", "text"),
            trace_file=data.get("trace_file"),
            bounds=BoundsConfig(**{k: int(v) for k, v in bounds_raw.items()}),
            raw=data,
        )
