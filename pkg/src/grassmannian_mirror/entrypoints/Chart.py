from __future__ import annotations

import sys
from typing import Sequence

from grassmannian_mirror.core.constants import EXIT_OK
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig
from grassmannian_mirror.entrypoints.cli_support import run_command
from grassmannian_mirror.pipelines.BuildChartReportsPipeline import (
    BuildChartReportsParams,
    BuildChartReportsPipeline,
)


PARAMETER_DOCS = {
    "output_format": "json (reports with holonomies) or text.",
}


def _body(run: RunConfig, cfg: PipelineConfig) -> int:
    BuildChartReportsPipeline().run(BuildChartReportsParams(run=run))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(
        "chart",
        argv,
        "Rectangular-chart membership, critical values and holonomies of every Karp point.",
        PARAMETER_DOCS,
        _body,
    )


if __name__ == "__main__":
    sys.exit(main())
