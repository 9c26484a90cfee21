from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from grassmannian_mirror.builders.GelfandCetlinBuilder import GelfandCetlinBuilder, faces_frame
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.utils.artefacts import (
    companion_table_path,
    main_output_path,
    validate_payload,
    write_table,
)
from grassmannian_mirror.utils.json_output import write_json, write_text


@dataclass(frozen=True)
class BuildPotentialsParams:
    run: RunConfig


class BuildPotentialsPipeline:
    """
    Disk potential, chart potential and the substitution between them
      -> potentials_k{k}_n{n}.json | .txt
      -> faces_k{k}_n{n}.csv
    """

    STEM = "potentials"
    TABLE_STEM = "faces"

    def run(self, params: BuildPotentialsParams) -> Path:
        run = params.run
        pair = GelfandCetlinBuilder(run.grid).run()
        print(f"[INFO] {run.grid}: {len(pair.faces)} codimension-1 faces, {len(pair.disk)} disk terms")
        if not pair.pullback_holds:
            print("[WARN] pulled-back disk potential differs from the chart potential")

        out = main_output_path(self.STEM, run)
        if run.output_format == "json":
            payload = pair.to_json()
            validate_payload(payload, "potentials.schema.json")
            write_json(payload, out)
        else:
            write_text(pair.to_text(), out)

        table = write_table(faces_frame(list(pair.faces)), companion_table_path(self.TABLE_STEM, run))
        print(f"[OUTPUT] potentials exported => {out}")
        print(f"[OUTPUT] faces table exported => {table}")
        return out
