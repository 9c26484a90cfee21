from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import pandas as pd

from grassmannian_mirror.algebra.CycInt import CycInt, cyc_product, cyc_sum
from grassmannian_mirror.algebra.ExactDeterminant import monomial_determinant
from grassmannian_mirror.algebra.RootSet import (
    RootSet,
    closest_to_one,
    complement_labeling,
    enumerate_rootsets,
    mirror_sign,
)
from grassmannian_mirror.algebra.SchurEvaluator import schur_value
from grassmannian_mirror.combinatorics.YoungDiagram import (
    GridShape,
    YoungDiagram,
    boundary_rectangles,
    enumerate_diagrams,
    enumerate_rectangles,
    horizontal_steps,
    pieri_expand,
    rectangle_dims,
    transpose,
)
from grassmannian_mirror.core.constants import DEFAULT_TOLERANCE
from grassmannian_mirror.core.errors import RootSetError
from grassmannian_mirror.utils.json_output import clean_float
from grassmannian_mirror.utils.parallel_map import parallel_map


# ---------------------------------------------------------------------
# Critical points
# ---------------------------------------------------------------------
@dataclass(frozen=True, order=True)
class CriticalPoint:
    """Karp point [M_I]: n-k distinct roots of x^n = (-1)^(n-k+1)."""

    grid: GridShape
    roots: RootSet

    def __post_init__(self) -> None:
        g, I = self.grid, self.roots
        if I.n != g.n or I.size != g.cols or I.sign != mirror_sign(g.k, g.n):
            raise RootSetError(
                f"Critical point of {g} needs {g.cols} roots of "
                f"x^{g.n} = {mirror_sign(g.k, g.n):+d}, got {I}"
            )

    @property
    def qh_label(self) -> RootSet:
        """The quantum-side root set J = -I^c with S_d(J) = S_{d^T}(I)."""
        return complement_labeling(self.roots)

    def act(self, g) -> "CriticalPoint":
        return CriticalPoint(self.grid, g.act(self.roots))


def enumerate_critical_points(grid: GridShape) -> List[CriticalPoint]:
    return [
        CriticalPoint(grid, I)
        for I in enumerate_rootsets(grid.n, grid.cols, mirror_sign(grid.k, grid.n))
    ]


def plucker_minor(I: RootSet | CriticalPoint, d: YoungDiagram) -> CycInt:
    """
    Minor of the n x (n-k) Vandermonde matrix M_I (row r holds zeta_j^(r-1))
    at the rows given by the horizontal steps of d.
    """
    roots = I.roots if isinstance(I, CriticalPoint) else I
    if roots.size != d.grid.cols:
        raise RootSetError(f"{d.grid} needs {d.grid.cols} roots, got {roots.size}")
    rows = [[(h - 1) * e for e in roots.exponents] for h in horizontal_steps(d)]
    return monomial_determinant(rows, roots.order)


def normalized_plucker(I: RootSet, d: YoungDiagram) -> CycInt:
    """p_d / p_empty at [M_I], i.e. S_{d^T}(I)."""
    return schur_value(transpose(d), I)


def rectangle_label(d: YoungDiagram) -> str:
    dims = rectangle_dims(d)
    if dims is None:
        return str(d)
    return f"{dims[0]}x{dims[1]}"


# ---------------------------------------------------------------------
# Chart report
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class ChartReport:
    point: CriticalPoint
    values: Tuple[Tuple[YoungDiagram, CycInt], ...]
    member: bool
    failing: Tuple[YoungDiagram, ...]
    critical_value: CycInt
    value: complex

    def value_of(self, d: YoungDiagram) -> CycInt:
        for rect, v in self.values:
            if rect == d:
                return v
        raise KeyError(f"{d} is not a rectangle of {self.point.grid}")

    def to_json(self) -> Dict[str, object]:
        return {
            "mirror_exponents": list(self.point.roots.exponents),
            "qh_exponents": list(self.point.qh_label.exponents),
            "member": self.member,
            "failing_rectangles": [rectangle_label(d) for d in self.failing],
            "critical_value": {"re": clean_float(self.value.real), "im": clean_float(self.value.imag)},
        }


def chart_report(point: CriticalPoint) -> ChartReport:
    """
    S_{d^T}(I) over all k(n-k)+1 rectangles. Membership is decided through
    the Plucker minors (alternants), which avoids dividing by V(I).
    """
    I = point.roots
    rects = enumerate_rectangles(point.grid)
    values = tuple((d, normalized_plucker(I, d)) for d in rects)
    failing = tuple(d for d in rects if plucker_minor(I, d).is_zero())
    s_box = cyc_sum(I.values(), I.order)
    critical = s_box * point.grid.n
    return ChartReport(
        point=point,
        values=values,
        member=not failing,
        failing=failing,
        critical_value=critical,
        value=critical.to_complex(),
    )


class ChartReportBuilder:
    def __init__(self, grid: GridShape, jobs: int = 1) -> None:
        self.grid = grid
        self.jobs = jobs

    def run(self) -> List[ChartReport]:
        points = enumerate_critical_points(self.grid)
        return parallel_map(chart_report, points, jobs=self.jobs, desc=f"charts {self.grid}")

    @staticmethod
    def to_frame(reports: List[ChartReport]) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "mirror_exponents": str(list(r.point.roots.exponents)),
                    "qh_exponents": str(list(r.point.qh_label.exponents)),
                    "member": r.member,
                    "failing_rectangles": " ".join(rectangle_label(d) for d in r.failing),
                    "re": clean_float(r.value.real),
                    "im": clean_float(r.value.imag),
                }
                for r in reports
            ],
            columns=["mirror_exponents", "qh_exponents", "member", "failing_rectangles", "re", "im"],
        )


# ---------------------------------------------------------------------
# Global superpotential at Karp points
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class GlobalPotentialCheck:
    point: CriticalPoint
    boundary_nonzero: bool
    pieri_terms_ok: bool
    total_ok: bool

    @property
    def passed(self) -> bool:
        return self.boundary_nonzero and self.pieri_terms_ok and self.total_ok


def boundary_numerators(grid: GridShape) -> List[Tuple[YoungDiagram, YoungDiagram]]:
    """(d_t, d_t^box) where d_t^box is the single term of the quantum Pieri product."""
    out = []
    for d in boundary_rectangles(grid):
        terms = pieri_expand(d).terms()
        if len(terms) != 1:
            raise ValueError(f"Boundary rectangle {d} has {len(terms)} Pieri terms, expected 1")
        out.append((d, terms[0]))
    return out


def global_potential_check(point: CriticalPoint) -> GlobalPotentialCheck:
    """
    W = sum_t p(d_t^box) / p(d_t) at [M_I] equals n S_1(I). Checked with
    Plucker minors and cross-multiplication only.
    """
    I = point.roots
    pairs = boundary_numerators(point.grid)
    nums = [plucker_minor(I, top) for _, top in pairs]
    dens = [plucker_minor(I, d) for d, _ in pairs]
    s_box = cyc_sum(I.values(), I.order)

    boundary_nonzero = all(not den.is_zero() for den in dens)
    pieri_ok = all(num == s_box * den for num, den in zip(nums, dens))

    order = I.order
    lhs = cyc_sum(
        (nums[t] * cyc_product((dens[s] for s in range(len(dens)) if s != t), order)
         for t in range(len(nums))),
        order,
    )
    rhs = s_box * point.grid.n * cyc_product(dens, order)
    return GlobalPotentialCheck(point, boundary_nonzero, pieri_ok, lhs == rhs)


# ---------------------------------------------------------------------
# Totally positive point
# ---------------------------------------------------------------------
def totally_positive_point(grid: GridShape) -> CriticalPoint:
    """I_0: the n-k roots closest to 1."""
    return CriticalPoint(grid, closest_to_one(grid.n, grid.cols, mirror_sign(grid.k, grid.n)))


@dataclass(frozen=True)
class PositivityReport:
    point: CriticalPoint
    non_real: Tuple[YoungDiagram, ...]
    non_positive: Tuple[YoungDiagram, ...]

    @property
    def passed(self) -> bool:
        return not self.non_real and not self.non_positive


def total_positivity(grid: GridShape, tol: float = DEFAULT_TOLERANCE) -> PositivityReport:
    """Every S_{d^T}(I_0) is real (equal to its conjugate) and > tol."""
    point = totally_positive_point(grid)
    non_real, non_positive = [], []
    for d in enumerate_diagrams(grid):
        v = normalized_plucker(point.roots, d)
        if v != v.conj():
            non_real.append(d)
        elif v.to_complex().real <= tol:
            non_positive.append(d)
    return PositivityReport(point, tuple(non_real), tuple(non_positive))


def max_modulus_violations(reports: List[ChartReport], grid: GridShape, tol: float = DEFAULT_TOLERANCE) -> List[CriticalPoint]:
    """Points with |n S_1(I)| > n S_1(I_0) + tol."""
    top = chart_report(totally_positive_point(grid)).value.real
    return [r.point for r in reports if abs(r.value) > top + tol * max(1.0, top)]


def rotation_orbit(point: CriticalPoint) -> List[CriticalPoint]:
    return [CriticalPoint(point.grid, point.roots.rotate(s)) for s in range(point.grid.n)]
