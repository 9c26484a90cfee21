from __future__ import annotations

from dataclasses import fields, is_dataclass
from math import comb
from pathlib import Path
from typing import Any, Collection, Dict, Mapping, Optional

from grassmannian_mirror.combinatorics.YoungDiagram import GridShape
from grassmannian_mirror.utils.RepoPaths import RepoPaths

BANNER_WIDTH = 60


def _format_value(value: Any) -> str:
    """Stable rendering: identical runs print identical banners."""
    if value is None:
        return "default"
    if isinstance(value, GridShape):
        return f"{value}  [{value.k}x{value.cols} grid, {value.cells} cells, rank {comb(value.n, value.k)}]"
    if isinstance(value, float):
        return f"{value:.3g}"
    if isinstance(value, Path):
        try:
            return str(value.resolve().relative_to(RepoPaths.ROOT))
        except ValueError:
            return str(value)
    return str(value)


def _as_mapping(params: Any) -> Dict[str, Any]:
    if is_dataclass(params):
        return {f.name: getattr(params, f.name) for f in fields(params)}
    if isinstance(params, Mapping):
        return dict(params)
    return {"value": params}


def log_parameters(
    entrypoint_name: str,
    params: Any,
    docs: Optional[Mapping[str, str]] = None,
    extra: Optional[Mapping[str, Any]] = None,
    exclude: Collection[str] = (),
) -> None:
    """
    Print the [ENTRYPOINT] / [PARAMETERS] banner of a command.

    extra (grid, mode) comes first; documented params get their doc in parentheses.
    A GridShape also prints its cell count and the rank C(n,k) of the Schubert basis.
    Keys in `exclude` are left out so the banner stays identical across them.
    """
    docs = docs or {}
    rows = [(key, value, "") for key, value in (extra or {}).items()]
    rows += [(key, value, docs.get(key, "")) for key, value in _as_mapping(params).items() if key not in exclude]

    print()
    print("_" * BANNER_WIDTH)
    print(f"[ENTRYPOINT] {entrypoint_name}")
    print("[PARAMETERS]")
    for key, value, meaning in rows:
        line = f"  {key} = {_format_value(value)}"
        print(f"{line}    ({meaning})" if meaning else line)
    print("-" * BANNER_WIDTH)
