from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from grassmannian_mirror.builders.SpectralDecompositionBuilder import (
    SpectralDecompositionBuilder,
    SpectralSummary,
)
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
class BuildFlowerParams:
    run: RunConfig
    svg_size: int = SVG_VIEWBOX
    svg_hashsalt: str = SVG_HASHSALT


class BuildFlowerPipeline:
    """
    Spectrum of c_1 on QH(Gr(k,n)) at q = 1
      -> spectrum_k{k}_n{n}.json | .txt | .svg
      -> spectrum_k{k}_n{n}.csv
    """

    STEM = "spectrum"

    def run(self, params: BuildFlowerParams) -> Path:
        run = params.run
        summary = SpectralDecompositionBuilder(run.grid, jobs=run.jobs, tol=run.tolerance).run()
        print(
            f"[INFO] {run.grid}: {len(summary.groups)} distinct eigenvalues, "
            f"{len(summary.max_modulus_groups())} of maximal modulus"
        )

        out = main_output_path(self.STEM, run)
        if run.output_format == "json":
            payload = summary.to_json()
            validate_payload(payload, "spectral_summary.schema.json")
            write_json(payload, out)
        elif run.output_format == "text":
            write_text(frame_text(f"Eigenvalues of c_1 on QH({run.grid})", summary.to_frame()), out)
        else:
            self._render(summary, params, out)

        table = write_table(summary.to_frame(), companion_table_path(self.STEM, run))
        print(f"[OUTPUT] spectrum exported => {out}")
        print(f"[OUTPUT] spectrum table exported => {table}")
        return out

    @staticmethod
    def _render(summary: SpectralSummary, params: BuildFlowerParams, out: Path) -> Path:
        points = [
            PlotPoint(g.value, g.multiplicity, filled=True, max_modulus=g.is_max_modulus)
            for g in summary.groups
        ]
        renderer = ComplexPlaneSvgRenderer(params.svg_size, params.svg_hashsalt)
        return renderer.render(points, f"Eigenvalues of c1 on QH({summary.grid})", out)
