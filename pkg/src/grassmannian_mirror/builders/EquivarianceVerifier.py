from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from grassmannian_mirror.algebra.CycInt import CycInt, proportionality_failures
from grassmannian_mirror.algebra.RootSet import RootSet
from grassmannian_mirror.algebra.SchurEvaluator import poincare_dual_failures, schur_value
from grassmannian_mirror.builders.ChartReportBuilder import (
    ChartReport,
    chart_report,
    enumerate_critical_points,
    plucker_minor,
)
from grassmannian_mirror.builders.DihedralAction import DihedralElement, all_elements
from grassmannian_mirror.combinatorics.YoungDiagram import (
    GridShape,
    YoungDiagram,
    enumerate_diagrams,
    poincare_dual,
)
from grassmannian_mirror.utils.parallel_map import parallel_map

CHECK_MEMBERSHIP = "membership_orbit"
CHECK_VALUE = "critical_value_equivariance"
CHECK_PD = "poincare_dual_proportionality"
CHECK_YOUNG = "young_action_pluecker"
CHECK_HOMOGENEITY = "schur_homogeneity"


@dataclass(frozen=True)
class EquivarianceViolation:
    root_set: RootSet
    element: DihedralElement
    check: str

    def to_json(self) -> Dict[str, object]:
        return {
            "check": self.check,
            "exponents": list(self.root_set.exponents),
            "element": self.element.label(),
        }


def young_action_pluecker(
    g: DihedralElement,
    vector: Sequence[CycInt],
    diagrams: Sequence[YoungDiagram],
) -> List[CycInt]:
    """
    Young action on a Plucker vector indexed by `diagrams`: s sends p_d to
    p_{PD(d)}, r multiplies p_d by zeta_n^{|d|}. s is applied first.
    """
    if len(vector) != len(diagrams):
        raise ValueError(f"Vector of length {len(vector)} for {len(diagrams)} diagrams")
    out = list(vector)
    if g.flip:
        index = {d: i for i, d in enumerate(diagrams)}
        out = [vector[index[poincare_dual(d)]] for d in diagrams]
    if g.t:
        out = [v.shift(2 * g.t * d.size) for v, d in zip(out, diagrams)]
    return out


@dataclass(frozen=True)
class EquivarianceReport:
    grid: GridShape
    root_sets: int
    elements: int
    violations: Tuple[EquivarianceViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [v.to_json() for v in self.violations],
            columns=["check", "exponents", "element"],
        )


class EquivarianceVerifier:
    """
    Exhaustive D_n checks over every size-(n-k) root set I:

    - member(gI) == member(I)
    - value(r^t s^f I) == zeta_n^t conj^f(value(I))
    - (S_{PD(d)}(I))_d proportional to (S_d(sI))_d, in the (n-k) x k grid
    - Young action on (p_d(M_I))_d proportional to (p_d(M_gI))_d
    """

    def __init__(self, grid: GridShape, jobs: int = 1, pluecker: bool = True) -> None:
        self.grid = grid
        self.jobs = jobs
        self.pluecker = pluecker

    def run(self) -> EquivarianceReport:
        grid = self.grid
        points = enumerate_critical_points(grid)
        reports: List[ChartReport] = parallel_map(
            chart_report, points, jobs=self.jobs, desc=f"charts {grid}"
        )
        by_roots: Dict[RootSet, ChartReport] = {r.point.roots: r for r in reports}

        diagrams = enumerate_diagrams(grid)
        vectors: Dict[RootSet, List[CycInt]] = {}
        if self.pluecker:
            vecs = parallel_map(
                lambda p: [plucker_minor(p.roots, d) for d in diagrams],
                points,
                jobs=self.jobs,
                desc=f"pluecker {grid}",
            )
            vectors = {p.roots: v for p, v in zip(points, vecs)}

        elements = all_elements(grid.n)

        def check(point) -> List[EquivarianceViolation]:
            I = point.roots
            base = by_roots[I]
            out: List[EquivarianceViolation] = []

            if poincare_dual_failures(I, grid.transposed()):
                out.append(EquivarianceViolation(I, DihedralElement.s(grid.n), CHECK_PD))

            for g in elements:
                gI = g.act(I)
                image = by_roots[gI]
                if image.member != base.member:
                    out.append(EquivarianceViolation(I, g, CHECK_MEMBERSHIP))

                expected = base.critical_value.conj() if g.flip else base.critical_value
                if image.critical_value != expected.shift(2 * g.t):
                    out.append(EquivarianceViolation(I, g, CHECK_VALUE))

                if not g.flip and g.t == 1 and not _homogeneous(I, gI, grid):
                    out.append(EquivarianceViolation(I, g, CHECK_HOMOGENEITY))

                if self.pluecker:
                    moved = young_action_pluecker(g, vectors[I], diagrams)
                    if proportionality_failures(moved, vectors[gI]):
                        out.append(EquivarianceViolation(I, g, CHECK_YOUNG))
            return out

        found = parallel_map(check, points, jobs=self.jobs, desc=f"equivariance {grid}")
        violations = tuple(v for chunk in found for v in chunk)
        return EquivarianceReport(grid, len(points), len(elements), violations)


def _homogeneous(I: RootSet, rI: RootSet, grid: GridShape) -> bool:
    """S_lam(rI) = zeta_n^{|lam|} S_lam(I) over the (n-k) x k grid."""
    return all(
        schur_value(d, rI) == schur_value(d, I).shift(2 * d.size)
        for d in enumerate_diagrams(grid.transposed())
    )


def verify_equivariance(grid: GridShape, jobs: int = 1) -> List[EquivarianceViolation]:
    return list(EquivarianceVerifier(grid, jobs=jobs).run().violations)
