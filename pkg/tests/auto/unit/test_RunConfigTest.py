from __future__ import annotations

import io
import os
import shutil
import unittest
from contextlib import redirect_stdout
from pathlib import Path

from grassmannian_mirror.core.errors import GrMirrorError, InvalidGridError
from grassmannian_mirror.core.params import RunConfig
from grassmannian_mirror.render.ComplexPlaneSvgRenderer import ComplexPlaneSvgRenderer, PlotPoint
from grassmannian_mirror.utils.artefacts import companion_table_path, main_output_path
from grassmannian_mirror.utils.log_parameters import log_parameters


class RunConfigTest(unittest.TestCase):
    def setUp(self) -> None:
        self.test_root = Path("tests/fixtures/generated/run_config_test").resolve()
        if self.test_root.exists():
            shutil.rmtree(self.test_root)
        self.test_root.mkdir(parents=True, exist_ok=True)
        os.environ["GRMIRROR_RUN_ROOT"] = str(self.test_root)

    def tearDown(self) -> None:
        os.environ.pop("GRMIRROR_RUN_ROOT", None)

    def test_validation(self) -> None:
        with self.assertRaises(InvalidGridError):
            RunConfig(k=5, n=5, command="flower")
        with self.assertRaises(GrMirrorError):
            RunConfig(k=2, n=5, command="nope")
        with self.assertRaises(GrMirrorError):
            RunConfig(k=2, n=5, command="verify", output_format="svg")
        with self.assertRaises(GrMirrorError):
            RunConfig(k=2, n=5, command="flower", jobs=0)
        with self.assertRaises(GrMirrorError):
            RunConfig(k=2, n=5, command="flower", tolerance=0.0)

    def test_default_paths(self) -> None:
        run = RunConfig(k=2, n=5, command="flower", output_format="svg")
        self.assertEqual(main_output_path("spectrum", run), self.test_root / "outputs" / "figures" / "spectrum_k2_n5.svg")
        self.assertEqual(companion_table_path("spectrum", run), self.test_root / "outputs" / "tables" / "spectrum_k2_n5.csv")

    def test_explicit_out(self) -> None:
        out = self.test_root / "custom" / "x.json"
        run = RunConfig(k=2, n=5, command="chart", out_path=out)
        self.assertEqual(main_output_path("charts", run), out)
        self.assertEqual(companion_table_path("charts", run), out.parent / "charts_k2_n5.csv")


class ComplexPlaneSvgRendererTest(unittest.TestCase):
    def setUp(self) -> None:
        self.test_root = Path("tests/fixtures/generated/svg_renderer_test").resolve()
        if self.test_root.exists():
            shutil.rmtree(self.test_root)
        self.test_root.mkdir(parents=True, exist_ok=True)

    def test_render_is_byte_stable(self) -> None:
        points = [
            PlotPoint(8.09 + 0j, 1, True, True),
            PlotPoint(-3.0 + 2.0j, 2, False, False),
            PlotPoint(0j, 3, True, False),
        ]
        renderer = ComplexPlaneSvgRenderer(size=300)
        a = renderer.render(points, "Gr(2,5)", self.test_root / "a.svg")
        b = renderer.render(points, "Gr(2,5)", self.test_root / "b.svg")
        self.assertTrue(a.exists())
        text = a.read_text(encoding="utf-8")
        self.assertIn("<svg", text)
        self.assertEqual(a.read_bytes(), b.read_bytes())

    def test_empty_points(self) -> None:
        out = ComplexPlaneSvgRenderer().render([], "empty", self.test_root / "empty.svg")
        self.assertTrue(out.exists())


class LogParametersTest(unittest.TestCase):
    def test_banner_lists_grid_rank_and_docs(self) -> None:
        run = RunConfig(k=2, n=5, command="flower", tolerance=1e-9)
        buf = io.StringIO()
        with redirect_stdout(buf):
            log_parameters("flower", run, docs={"k": "Subspace dimension."}, extra={"grid": run.grid})
        text = buf.getvalue()
        self.assertIn("[ENTRYPOINT] flower", text)
        self.assertIn("grid = Gr(2,5)  [2x3 grid, 6 cells, rank 10]", text)
        self.assertIn("k = 2    (Subspace dimension.)", text)
        self.assertIn("tolerance = 1e-09", text)
        self.assertIn("out_path = default", text)

    def test_excluded_keys_are_not_printed(self) -> None:
        buf = io.StringIO()
        with redirect_stdout(buf):
            log_parameters("chart", RunConfig(k=2, n=5, command="chart", jobs=8), exclude=("jobs",))
        self.assertNotIn("jobs", buf.getvalue())
        self.assertIn("command = chart", buf.getvalue())


if __name__ == "__main__":
    unittest.main()
