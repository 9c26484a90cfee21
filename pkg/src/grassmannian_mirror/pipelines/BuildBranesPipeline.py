from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from grassmannian_mirror.builders.BranesSummaryBuilder import BranesSummary, BranesSummaryBuilder
from grassmannian_mirror.core.constants import SVG_HASHSALT, SVG_VIEWBOX
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.render.ComplexPlaneSvgRenderer import ComplexPlaneSvgRenderer, PlotPoint
from grassmannian_mirror.utils.artefacts import (
    companion_table_path,
    frame_text,
    main_output_path,
    validate_payload,
    write_table,
)
from grassmannian_mirror.utils.json_output import write_json, write_text


@dataclass(frozen=True)
class BuildBranesParams:
    run: RunConfig
    svg_size: int = SVG_VIEWBOX
    svg_hashsalt: str = SVG_HASHSALT


class BuildBranesPipeline:
    """
    Spectrum joined with rectangular-chart membership
      -> branes_k{k}_n{n}.json | .txt | .svg (occupied filled, unoccupied hollow)
      -> branes_k{k}_n{n}.csv
    """

    STEM = "branes"

    def run(self, params: BuildBranesParams) -> Path:
        run = params.run
        summary = BranesSummaryBuilder(run.grid, jobs=run.jobs, tol=run.tolerance).run()
        print(f"[INFO] {run.grid}: {summary.occupied_count()} of {len(summary.groups)} summands occupied")
        if not summary.values_match:
            print("[WARN] critical values and eigenvalues differ as multisets")
        mixed = [lvl for lvl, ok in summary.level_uniform.items() if not ok]
        if mixed:
            print(f"[WARN] modulus levels with mixed occupancy: {mixed}")

        out = main_output_path(self.STEM, run)
        if run.output_format == "json":
            payload = summary.to_json()
            validate_payload(payload, "branes_summary.schema.json")
            write_json(payload, out)
        elif run.output_format == "text":
            write_text(frame_text(f"Summands of F({run.grid})", summary.to_frame()), out)
        else:
            self._render(summary, params, out)

        table = write_table(summary.to_frame(), companion_table_path(self.STEM, run))
        print(f"[OUTPUT] branes exported => {out}")
        print(f"[OUTPUT] branes table exported => {table}")
        return out

    @staticmethod
    def _render(summary: BranesSummary, params: BuildBranesParams, out: Path) -> Path:
        points = [
            PlotPoint(b.group.value, b.group.multiplicity, filled=b.occupied, max_modulus=b.group.is_max_modulus)
            for b in summary.groups
        ]
        renderer = ComplexPlaneSvgRenderer(params.svg_size, params.svg_hashsalt)
        return renderer.render(points, f"Occupied summands of F({summary.grid})", out)
