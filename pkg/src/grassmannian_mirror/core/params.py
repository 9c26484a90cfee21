from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from grassmannian_mirror.combinatorics.YoungDiagram import GridShape
from grassmannian_mirror.core.constants import COMMANDS, DEFAULT_TOLERANCE, OUTPUT_FORMATS, SVG_COMMANDS
from grassmannian_mirror.core.errors import GrMirrorError


@dataclass(frozen=True)
class RunConfig:
    """Resolved command-line run: flags over YAML over built-in defaults."""

    k: int
    n: int
    command: str
    output_format: str = "json"
    out_path: Optional[Path] = None
    jobs: int = 1
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        GridShape(self.k, self.n)
        if self.command not in COMMANDS:
            raise GrMirrorError(f"Unknown command {self.command!r}. Allowed: {list(COMMANDS)}")
        if self.output_format not in OUTPUT_FORMATS:
            raise GrMirrorError(
                f"Unknown format {self.output_format!r}. Allowed: {list(OUTPUT_FORMATS)}"
            )
        if self.output_format == "svg" and self.command not in SVG_COMMANDS:
            raise GrMirrorError(
                f"Format 'svg' is only available for {list(SVG_COMMANDS)}, not {self.command!r}"
            )
        if self.jobs < 1:
            raise GrMirrorError(f"jobs must be >= 1, got {self.jobs!r}")
        if not self.tolerance > 0:
            raise GrMirrorError(f"tolerance must be > 0, got {self.tolerance!r}")

    @property
    def grid(self) -> GridShape:
        return GridShape(self.k, self.n)

    @property
    def extension(self) -> str:
        return {"text": "txt", "json": "json", "svg": "svg"}[self.output_format]
