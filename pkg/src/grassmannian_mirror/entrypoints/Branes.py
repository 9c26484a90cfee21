from __future__ import annotations

import sys
from typing import Sequence

from grassmannian_mirror.core.constants import EXIT_OK
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig
from grassmannian_mirror.entrypoints.cli_support import run_command
from grassmannian_mirror.pipelines.BuildBranesPipeline import BuildBranesParams, BuildBranesPipeline


PARAMETER_DOCS = {
    "output_format": "json (spectrum + occupancy), text (table) or svg (filled = occupied).",
}


def _body(run: RunConfig, cfg: PipelineConfig) -> int:
    params = BuildBranesParams(run=run, svg_size=cfg.svg_size, svg_hashsalt=cfg.svg_hashsalt)
    BuildBranesPipeline().run(params)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(
        "branes",
        argv,
        "Summands of the spectral decomposition hit by a critical point of the rectangular chart.",
        PARAMETER_DOCS,
        _body,
    )


if __name__ == "__main__":
    sys.exit(main())
