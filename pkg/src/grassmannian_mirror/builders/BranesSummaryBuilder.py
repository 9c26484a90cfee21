from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import log10
from typing import Dict, List, Tuple

import pandas as pd

from grassmannian_mirror.algebra.CycInt import CycInt
from grassmannian_mirror.builders.ChartReportBuilder import (
    ChartReport,
    ChartReportBuilder,
    rotation_orbit,
    totally_positive_point,
)
from grassmannian_mirror.builders.SpectralDecompositionBuilder import (
    SpectralDecompositionBuilder,
    SpectralGroup,
    SpectralSummary,
    group_json,
)
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape
from grassmannian_mirror.core.constants import DEFAULT_TOLERANCE
from grassmannian_mirror.utils.json_output import clean_float


@dataclass(frozen=True)
class BraneGroup:
    group: SpectralGroup
    occupied: bool
    witnesses: Tuple[ChartReport, ...]

    def to_json(self) -> Dict[str, object]:
        out = group_json(self.group)
        out["occupied"] = self.occupied
        out["witnesses"] = [list(r.point.roots.exponents) for r in self.witnesses]
        out["qh_witnesses"] = [list(r.point.qh_label.exponents) for r in self.witnesses]
        return out


@dataclass(frozen=True)
class BranesSummary:
    spectrum: SpectralSummary
    groups: Tuple[BraneGroup, ...]
    values_match: bool
    orbit_closed: bool
    max_modulus_occupied: bool
    level_uniform: Dict[float, bool]

    @property
    def grid(self) -> GridShape:
        return self.spectrum.grid

    def occupied_count(self) -> int:
        return sum(1 for g in self.groups if g.occupied)

    def to_json(self) -> Dict[str, object]:
        return {
            "k": self.grid.k,
            "n": self.grid.n,
            "eigenvalues": [g.to_json() for g in self.groups],
            "checks": {
                "values_match": self.values_match,
                "orbit_closed": self.orbit_closed,
                "max_modulus_occupied": self.max_modulus_occupied,
                "levels_uniform": all(self.level_uniform.values()),
            },
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "re": clean_float(b.group.value.real),
                    "im": clean_float(b.group.value.imag),
                    "modulus": clean_float(b.group.modulus),
                    "multiplicity": b.group.multiplicity,
                    "occupied": b.occupied,
                    "witnesses": " ".join(str(list(r.point.roots.exponents)) for r in b.witnesses),
                }
                for b in self.groups
            ],
            columns=["re", "im", "modulus", "multiplicity", "occupied", "witnesses"],
        )


def _dihedral_orbit(value: CycInt, n: int) -> List[CycInt]:
    return [v.shift(2 * t) for v in (value, value.conj()) for t in range(n)]


class BranesSummaryBuilder:
    """
    Joins the quantum spectrum with the chart reports of every mirror root
    set: a group is occupied iff some chart member has that critical value.
    """

    def __init__(self, grid: GridShape, jobs: int = 1, tol: float = DEFAULT_TOLERANCE) -> None:
        self.grid = grid
        self.jobs = jobs
        self.tol = tol

    def run(self) -> BranesSummary:
        spectrum = SpectralDecompositionBuilder(self.grid, jobs=self.jobs, tol=self.tol).run()
        reports = ChartReportBuilder(self.grid, jobs=self.jobs).run()
        return self.join(spectrum, reports)

    def join(self, spectrum: SpectralSummary, reports: List[ChartReport]) -> BranesSummary:
        by_value: Dict[CycInt, List[ChartReport]] = {}
        for r in reports:
            by_value.setdefault(r.critical_value, []).append(r)

        groups = []
        for g in spectrum.groups:
            members = tuple(r for r in by_value.get(g.eigenvalue, []) if r.member)
            groups.append(BraneGroup(g, bool(members), members))

        qh = Counter({g.eigenvalue: g.multiplicity for g in spectrum.groups})
        mirror = Counter(r.critical_value for r in reports)
        values_match = qh == mirror

        occupied = {b.group.eigenvalue for b in groups if b.occupied}
        orbit_closed = all(
            v in occupied for value in occupied for v in _dihedral_orbit(value, self.grid.n)
        )

        top = {p.roots for p in rotation_orbit(totally_positive_point(self.grid))}
        max_groups = [b for b in groups if b.group.is_max_modulus]
        max_ok = all(b.occupied for b in max_groups) and {
            r.point.roots for b in max_groups for r in b.witnesses
        } == top

        levels: Dict[float, List[bool]] = {}
        digits = max(0, int(round(-log10(self.tol))))
        for b in groups:
            levels.setdefault(round(b.group.modulus, digits), []).append(b.occupied)
        uniform = {lvl: len(set(flags)) == 1 for lvl, flags in levels.items()}

        return BranesSummary(
            spectrum=spectrum,
            groups=tuple(groups),
            values_match=values_match,
            orbit_closed=orbit_closed,
            max_modulus_occupied=max_ok,
            level_uniform=uniform,
        )


def branes_summary(grid: GridShape, jobs: int = 1, tol: float = DEFAULT_TOLERANCE) -> BranesSummary:
    return BranesSummaryBuilder(grid, jobs=jobs, tol=tol).run()
