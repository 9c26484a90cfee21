from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict

import jsonschema
import pandas as pd

from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.utils.RepoPaths import RepoPaths


def artefact_stem(stem: str, run: RunConfig) -> str:
    return f"{stem}_k{run.k}_n{run.n}"


def main_output_path(stem: str, run: RunConfig) -> Path:
    """--out when given, else outputs/figures (svg) or outputs/tables."""
    if run.out_path is not None:
        return Path(run.out_path)
    name = f"{artefact_stem(stem, run)}.{run.extension}"
    return RepoPaths.figure(name) if run.output_format == "svg" else RepoPaths.table(name)


def companion_table_path(stem: str, run: RunConfig) -> Path:
    """CSV companion: next to --out when given, else outputs/tables."""
    name = f"{artefact_stem(stem, run)}.csv"
    if run.out_path is not None:
        return Path(run.out_path).parent / name
    return RepoPaths.table(name)


def write_table(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n")
    return path


def frame_text(title: str, df: pd.DataFrame) -> str:
    body = df.to_string(index=False) if not df.empty else "(no rows)"
    return f"{title}\n{body}\n"


def _load_schema(schema_name: str) -> Dict[str, Any]:
    path = RepoPaths.schema(schema_name)
    with path.open("r", encoding="utf-8") as f:
        return json.load(f)


def validate_payload(payload: Any, schema_name: str) -> None:
    """
    Validate against schema/<schema_name> when the schema tree is present
    (an installed package without the repo skips this silently).
    """
    if not RepoPaths.schema(schema_name).exists():
        return
    jsonschema.validate(instance=payload, schema=_load_schema(schema_name))
