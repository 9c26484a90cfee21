from __future__ import annotations

import sys
from typing import Sequence

from grassmannian_mirror.core.constants import EXIT_OK
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig
from grassmannian_mirror.entrypoints.cli_support import run_command
from grassmannian_mirror.pipelines.BuildFlowerPipeline import BuildFlowerParams, BuildFlowerPipeline


PARAMETER_DOCS = {
    "output_format": "json (SpectralSummary), text (table) or svg (eigenvalue flower).",
}


def _body(run: RunConfig, cfg: PipelineConfig) -> int:
    params = BuildFlowerParams(run=run, svg_size=cfg.svg_size, svg_hashsalt=cfg.svg_hashsalt)
    BuildFlowerPipeline().run(params)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(
        "flower",
        argv,
        "Eigenvalues of c_1 acting on QH(Gr(k,n)) at q = 1, grouped with multiplicities.",
        PARAMETER_DOCS,
        _body,
    )


if __name__ == "__main__":
    sys.exit(main())
