from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Tuple

from grassmannian_mirror.builders.InvariantSuiteBuilder import InvariantSuiteBuilder, VerifyReport
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.utils.artefacts import (
    companion_table_path,
    frame_text,
    main_output_path,
    validate_payload,
    write_table,
)
from grassmannian_mirror.utils.json_output import write_json, write_text


@dataclass(frozen=True)
class VerifyInvariantsParams:
    run: RunConfig
    mode: str = "deep"
    verification: Dict[str, Any] = field(default_factory=dict)


class VerifyInvariantsPipeline:
    """
    Full invariant suite for one grid
      -> verify_k{k}_n{n}.json | .txt
      -> verify_k{k}_n{n}.csv

    Returns the artefact path and the report; the entrypoint maps a failed
    report to its exit code.
    """

    STEM = "verify"

    def run(self, params: VerifyInvariantsParams) -> Tuple[Path, VerifyReport]:
        run = params.run
        report = InvariantSuiteBuilder(
            run.grid,
            params.verification,
            jobs=run.jobs,
            tol=run.tolerance,
            mode=params.mode,
        ).run()

        for r in report.results:
            tag = {"pass": "[OK]", "fail": "[FAIL]", "skipped": "[WARN]", "info": "[INFO]"}[r.status]
            witness = f" witness={r.witness}" if r.witness else ""
            print(f"{tag} {r.check}{witness} {r.detail}".rstrip())

        out = main_output_path(self.STEM, run)
        if run.output_format == "json":
            payload = report.to_json()
            validate_payload(payload, "verify_report.schema.json")
            write_json(payload, out)
        else:
            status = "PASS" if report.passed else "FAIL"
            write_text(frame_text(f"Invariant suite for {run.grid}: {status}", report.to_frame()), out)

        table = write_table(report.to_frame(), companion_table_path(self.STEM, run))
        print(f"[OUTPUT] verify report exported => {out}")
        print(f"[OUTPUT] verify table exported => {table}")
        return out, report
