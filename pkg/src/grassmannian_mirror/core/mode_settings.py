from __future__ import annotations

from copy import deepcopy
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional
import os


_ALLOWED_MODES = {"dev", "deep"}
_DEFAULT_MODE = "deep"


def _normalize_mode(raw_cfg: Mapping[str, Any]) -> str:
    """
    Read and validate top-level `mode` field.
    Missing => 'deep'. Invalid => ValueError.
    """
    mode = raw_cfg.get("mode", _DEFAULT_MODE)
    if mode not in _ALLOWED_MODES:
        raise ValueError(
            f"Invalid mode={mode!r}. Allowed values: {sorted(_ALLOWED_MODES)}"
        )
    return mode


@dataclass(frozen=True)
class ModeSettings:
    """
    Encapsulates dev vs deep behavior.

    - Given the raw `verification` YAML dict, returns the *effective* sweep
      bounds for the current mode.
    - Also resolves the worker count.
    """

    mode: str

    @classmethod
    def from_raw_config(cls, raw_cfg: Mapping[str, Any]) -> "ModeSettings":
        return cls(mode=_normalize_mode(raw_cfg))

    @property
    def is_dev(self) -> bool:
        return self.mode == "dev"

    @property
    def is_deep(self) -> bool:
        return self.mode == "deep"

    # ------------- Verification sweeps -------------

    def effective_verification(self, raw: Mapping[str, Any]) -> Dict[str, Any]:
        """
        Deep mode: pass-through (no clamping).
        Dev mode: smaller exhaustive sweeps and fewer random Schur cases.
        """
        ver = deepcopy(dict(raw))

        if self.is_deep:
            return ver

        MAX_EXHAUSTIVE_CELLS_DEV = 8
        MAX_EIGEN_DIMENSION_DEV = 70
        MAX_PULLBACK_CELLS_DEV = 12
        RANDOM_CASES_DEV = 20
        MAX_RANDOM_CELLS_DEV = 8

        clamps = {
            "max_exhaustive_cells": MAX_EXHAUSTIVE_CELLS_DEV,
            "max_eigen_dimension": MAX_EIGEN_DIMENSION_DEV,
            "max_pullback_cells": MAX_PULLBACK_CELLS_DEV,
            "random_cases": RANDOM_CASES_DEV,
            "max_random_cells": MAX_RANDOM_CELLS_DEV,
        }
        for key, cap in clamps.items():
            value = ver.get(key)
            if isinstance(value, int):
                ver[key] = min(value, cap)
            else:
                ver[key] = cap

        return ver

    # ------------- Parallelism -------------

    def effective_jobs(
        self, configured: Optional[int], env: Optional[Mapping[str, str]] = None
    ) -> int:
        """
        Priority:
        1. GRMIRROR_JOBS env var
        2. configured value (YAML `jobs`)
        3. dev: 1 worker, deep: available cores
        """
        env = env or os.environ
        override = env.get("GRMIRROR_JOBS")
        if override:
            try:
                return max(1, int(override))
            except ValueError:
                pass

        if isinstance(configured, int) and configured > 0:
            return configured

        return 1 if self.is_dev else max(1, os.cpu_count() or 1)
