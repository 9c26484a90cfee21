from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import os
import yaml

from grassmannian_mirror.utils.RepoPaths import RepoPaths
from grassmannian_mirror.core.mode_settings import ModeSettings
from grassmannian_mirror.core import constants, settings


DEFAULT_CONFIG_NAME = "grmirror.yaml"


@dataclass(frozen=True)
class PipelineConfig:
    raw: Dict[str, Any]

    # ---- mode / debug ----
    @property
    def mode_settings(self) -> ModeSettings:
        return ModeSettings.from_raw_config(self.raw)

    @property
    def mode(self) -> str:
        return self.mode_settings.mode

    @property
    def debug(self) -> bool:
        return bool(self.raw.get("debug", False))

    # ---- numerics ----
    @property
    def tolerance(self) -> float:
        """YAML `tolerance`, falling back to settings.TOLERANCE (env-overridable)."""
        value = self.raw.get("tolerance")
        return float(value) if value is not None else settings.TOLERANCE

    @property
    def jobs(self) -> int:
        configured = self.raw.get("jobs")
        if self.debug:
            return 1
        return self.mode_settings.effective_jobs(configured)

    # ---- verification sweeps ----
    @property
    def verification_params(self) -> Dict[str, Any]:
        """
        Effective sweep bounds: YAML `verification` block, completed with
        constants defaults, then clamped by ModeSettings.
        """
        defaults = {
            "max_exhaustive_cells": constants.MAX_EXHAUSTIVE_CELLS,
            "max_eigen_dimension": constants.MAX_EIGEN_DIMENSION,
            "max_pullback_cells": constants.MAX_PULLBACK_CELLS,
            "random_cases": constants.RANDOM_SCHUR_CASES,
            "max_random_cells": constants.MAX_RANDOM_CELLS,
            "random_seed": constants.RANDOM_SEED,
        }
        raw = {**defaults, **(self.raw.get("verification") or {})}
        return self.mode_settings.effective_verification(raw)

    # ---- rendering ----
    @property
    def svg_size(self) -> int:
        return int(self.raw.get("render", {}).get("svg_size", constants.SVG_VIEWBOX))

    @property
    def svg_hashsalt(self) -> str:
        return str(self.raw.get("render", {}).get("svg_hashsalt", constants.SVG_HASHSALT))


def _resolve_config_path(config_path: str | Path | None = None) -> Path:
    """
    Resolve the configuration path with the following priority:
    1) Explicit path argument
    2) GRMIRROR_CONFIG environment variable (absolute or relative to RepoPaths.ROOT)
    3) RepoPaths.ROOT / "config" / DEFAULT_CONFIG_NAME
    """
    if config_path is not None:
        return Path(config_path).expanduser().resolve()

    env_path = os.environ.get("GRMIRROR_CONFIG")
    if env_path:
        p = Path(env_path)
        if not p.is_absolute():
            p = RepoPaths.ROOT / p
        return p.expanduser().resolve()

    return (RepoPaths.ROOT / "config" / DEFAULT_CONFIG_NAME).resolve()


def load_pipeline_config(config_path: str | Path | None = None) -> PipelineConfig:
    """
    Missing default config => built-in defaults (the package stays usable
    when installed without the repo tree). Missing explicit config => error.
    """
    cfg_path = _resolve_config_path(config_path)

    if not cfg_path.exists():
        if config_path is not None or os.environ.get("GRMIRROR_CONFIG"):
            raise FileNotFoundError(f"Config not found at: {cfg_path}")
        return PipelineConfig(raw={})

    with cfg_path.open("r", encoding="utf-8") as f:
        raw: Optional[Dict[str, Any]] = yaml.safe_load(f)

    return PipelineConfig(raw=raw or {})
