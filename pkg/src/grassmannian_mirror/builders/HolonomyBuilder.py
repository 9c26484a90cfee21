from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from grassmannian_mirror.algebra.CycInt import CycInt
from grassmannian_mirror.algebra.LaurentPoly import LaurentPoly
from grassmannian_mirror.algebra.SchurEvaluator import schur_value
from grassmannian_mirror.builders.ChartReportBuilder import CriticalPoint, chart_report
from grassmannian_mirror.builders.GelfandCetlinBuilder import disk_potential, torus_cells, x_name
from grassmannian_mirror.combinatorics.YoungDiagram import rectangle, transpose
from grassmannian_mirror.core.constants import DEFAULT_TOLERANCE
from grassmannian_mirror.core.errors import UndefinedObjectError
from grassmannian_mirror.utils.json_output import clean_float


@dataclass(frozen=True)
class HolonomyEntry:
    i: int
    j: int
    numerator: CycInt
    denominator: CycInt
    value: complex

    @property
    def variable(self) -> str:
        return x_name(self.i, self.j)

    def to_json(self) -> Dict[str, object]:
        return {
            "variable": self.variable,
            "numerator": self.numerator.canonical().to_json(),
            "denominator": self.denominator.canonical().to_json(),
            "re": clean_float(self.value.real),
            "im": clean_float(self.value.imag),
        }


@dataclass(frozen=True)
class Holonomy:
    point: CriticalPoint
    entries: Tuple[HolonomyEntry, ...]

    def values(self) -> Dict[str, complex]:
        return {e.variable: e.value for e in self.entries}


def _normalized(point: CriticalPoint, height: int, width: int) -> CycInt:
    """p_{height x width} / p_empty at [M_I]."""
    return schur_value(transpose(rectangle(point.grid, height, width)), point.roots)


def holonomy(point: CriticalPoint) -> Holonomy:
    """
    x_{i,j} -> S of ((k+1-i) x j)^T over S of ((k-i) x (j-1))^T, kept as an
    exact pair; the float quotient is only taken once both are known nonzero.
    """
    report = chart_report(point)
    if not report.member:
        raise UndefinedObjectError(
            f"Root set {point.roots} is outside the rectangular chart of {point.grid}; "
            f"failing rectangles {[str(d) for d in report.failing]}"
        )
    k = point.grid.k
    entries = []
    for i, j in torus_cells(point.grid):
        num = _normalized(point, k + 1 - i, j)
        den = _normalized(point, k - i, j - 1)
        entries.append(HolonomyEntry(i, j, num, den, num.to_complex() / den.to_complex()))
    return Holonomy(point, tuple(entries))


@dataclass(frozen=True)
class CriticalityCheck:
    point: CriticalPoint
    max_log_derivative: float
    value_error: float
    scale: float
    tol: float

    @property
    def passed(self) -> bool:
        bound = self.tol * self.scale
        return self.max_log_derivative <= bound and self.value_error <= bound


def holonomy_criticality(point: CriticalPoint, tol: float = DEFAULT_TOLERANCE) -> CriticalityCheck:
    """
    hol_I is a critical point of the disk potential (every x d/dx vanishes)
    and the potential there equals n S_1(I).
    """
    hol = holonomy(point).values()
    W = disk_potential(point.grid)
    scale = max(1.0, sum(abs(LaurentPoly(W.registry, {e: c}).evaluate(hol)) for e, c in W.terms.items()))
    derivs: List[float] = [abs(W.log_derivative(name).evaluate(hol)) for name in W.registry.names]
    expected = chart_report(point).value
    return CriticalityCheck(
        point=point,
        max_log_derivative=max(derivs, default=0.0),
        value_error=abs(W.evaluate(hol) - expected),
        scale=scale,
        tol=tol,
    )
