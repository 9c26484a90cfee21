from __future__ import annotations

import sys
from typing import Sequence

from grassmannian_mirror.core.constants import EXIT_OK, EXIT_VERIFICATION_FAILED
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.core.pipeline_config import PipelineConfig
from grassmannian_mirror.entrypoints.cli_support import run_command
from grassmannian_mirror.pipelines.VerifyInvariantsPipeline import (
    VerifyInvariantsParams,
    VerifyInvariantsPipeline,
)


PARAMETER_DOCS = {
    "output_format": "json (machine-readable report) or text.",
}


def _body(run: RunConfig, cfg: PipelineConfig) -> int:
    params = VerifyInvariantsParams(run=run, mode=cfg.mode, verification=cfg.verification_params)
    _, report = VerifyInvariantsPipeline().run(params)
    if not report.passed:
        print(f"[FAIL] {len(report.failures())} check(s) failed for {run.grid}")
        return EXIT_VERIFICATION_FAILED
    print(f"[OK] all checks passed for {run.grid}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(
        "verify",
        argv,
        "Run the exact invariant suite for Gr(k,n); exit code 2 on any failure.",
        PARAMETER_DOCS,
        _body,
    )


if __name__ == "__main__":
    sys.exit(main())
