from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List

from grassmannian_mirror.builders.ChartReportBuilder import ChartReport, ChartReportBuilder
from grassmannian_mirror.builders.HolonomyBuilder import holonomy
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.utils.artefacts import (
    companion_table_path,
    frame_text,
    main_output_path,
    validate_payload,
    write_table,
)
from grassmannian_mirror.utils.json_output import write_json, write_text
from grassmannian_mirror.utils.parallel_map import parallel_map


@dataclass(frozen=True)
class BuildChartReportsParams:
    run: RunConfig


class BuildChartReportsPipeline:
    """
    One chart report per mirror root set, holonomies for chart members
      -> charts_k{k}_n{n}.json | .txt
      -> charts_k{k}_n{n}.csv
    """

    STEM = "charts"

    def run(self, params: BuildChartReportsParams) -> Path:
        run = params.run
        reports = ChartReportBuilder(run.grid, jobs=run.jobs).run()
        members = sum(1 for r in reports if r.member)
        print(f"[INFO] {run.grid}: {members} of {len(reports)} critical points in the rectangular chart")

        df = ChartReportBuilder.to_frame(reports)
        out = main_output_path(self.STEM, run)
        if run.output_format == "json":
            payload = {
                "k": run.k,
                "n": run.n,
                "reports": parallel_map(self._report_json, reports, jobs=run.jobs, desc=f"holonomy {run.grid}"),
            }
            validate_payload(payload, "chart_reports.schema.json")
            write_json(payload, out)
        else:
            write_text(frame_text(f"Chart reports for {run.grid}", df), out)

        table = write_table(df, companion_table_path(self.STEM, run))
        print(f"[OUTPUT] chart reports exported => {out}")
        print(f"[OUTPUT] chart table exported => {table}")
        return out

    @staticmethod
    def _report_json(report: ChartReport) -> Dict[str, Any]:
        out = report.to_json()
        entries: List[Dict[str, Any]] = []
        if report.member:
            entries = [e.to_json() for e in holonomy(report.point).entries]
        out["holonomy"] = entries
        return out
