from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from grassmannian_mirror.core.constants import JSON_FLOAT_DECIMALS, JSON_INDENT


def clean_float(value: float, decimals: int = JSON_FLOAT_DECIMALS) -> float:
    """Round for stable output; -0.0 becomes 0.0."""
    out = round(float(value), decimals)
    return 0.0 if out == 0 else out


def dumps(payload: Any) -> str:
    # key order is the construction order of the payload dicts
    return json.dumps(payload, indent=JSON_INDENT, ensure_ascii=False) + "\n"


def write_json(payload: Any, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(payload), encoding="utf-8")
    return path


def write_text(text: str, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    return path
