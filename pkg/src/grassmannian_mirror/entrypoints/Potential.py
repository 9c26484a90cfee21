from __future__ import annotations

import sys
from typing import Sequence

from grassmannian_mirror.core.constants import EXIT_OK
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig
from grassmannian_mirror.entrypoints.cli_support import run_command
from grassmannian_mirror.pipelines.BuildPotentialsPipeline import (
    BuildPotentialsParams,
    BuildPotentialsPipeline,
)


PARAMETER_DOCS = {
    "output_format": "json (potentials, substitution, faces) or text.",
}


def _body(run: RunConfig, cfg: PipelineConfig) -> int:
    BuildPotentialsPipeline().run(BuildPotentialsParams(run=run))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(
        "potential",
        argv,
        "Disk potential, rectangular-chart potential and the substitution relating them.",
        PARAMETER_DOCS,
        _body,
    )


if __name__ == "__main__":
    sys.exit(main())
