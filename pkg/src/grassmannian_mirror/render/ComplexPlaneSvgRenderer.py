from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle

from grassmannian_mirror.core.constants import (
    SVG_HASHSALT,
    SVG_POINT_RADIUS,
    SVG_RING_STEP,
    SVG_VIEWBOX,
)


@dataclass(frozen=True)
class PlotPoint:
    value: complex
    multiplicity: int = 1
    filled: bool = True
    max_modulus: bool = False


class ComplexPlaneSvgRenderer:
    """
    Deterministic SVG of points in the complex plane.

    - radii normalised by the largest modulus, so max-modulus points sit on
      the unit circle guide
    - multiplicity m draws m - 1 extra concentric rings around the point
    - filled / hollow markers carry occupancy
    - fonts are emitted as paths and metadata dates are dropped, so the
      file is self-contained and byte-stable
    """

    def __init__(self, size: int = SVG_VIEWBOX, hashsalt: str = SVG_HASHSALT) -> None:
        self.size = size
        self.hashsalt = hashsalt

    def render(self, points: Sequence[PlotPoint], title: str, out_path: Path) -> Path:
        scale = max((abs(p.value) for p in points), default=0.0) or 1.0
        inches = self.size / 72.0

        with matplotlib.rc_context({"svg.hashsalt": self.hashsalt, "svg.fonttype": "path"}):
            fig = plt.figure(figsize=(inches, inches), dpi=72)
            ax = fig.add_axes((0.08, 0.08, 0.84, 0.84))
            ax.set_xlim(-1.3, 1.3)
            ax.set_ylim(-1.3, 1.3)
            ax.set_aspect("equal")

            ax.axhline(0.0, color="0.6", linewidth=0.6)
            ax.axvline(0.0, color="0.6", linewidth=0.6)
            ax.add_patch(Circle((0.0, 0.0), 1.0, fill=False, linestyle="--", linewidth=0.6, edgecolor="0.5"))

            for p in points:
                x, y = p.value.real / scale, p.value.imag / scale
                color = "tab:red" if p.max_modulus else "tab:blue"
                ax.add_patch(Circle(
                    (x, y),
                    SVG_POINT_RADIUS,
                    facecolor=color if p.filled else "none",
                    edgecolor=color,
                    linewidth=1.2,
                ))
                for ring in range(1, p.multiplicity):
                    ax.add_patch(Circle(
                        (x, y),
                        SVG_POINT_RADIUS + ring * SVG_RING_STEP,
                        fill=False,
                        edgecolor=color,
                        linewidth=0.8,
                    ))

            ax.set_title(title)
            ax.set_xlabel(f"Re / {scale:.6g}")
            ax.set_ylabel(f"Im / {scale:.6g}")
            ax.grid(True, alpha=0.25)

            out_path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(out_path, format="svg", metadata={"Date": None, "Creator": None})
            plt.close(fig)

        return out_path
