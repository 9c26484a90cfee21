from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Literal, Mapping, Tuple

import pandas as pd

from grassmannian_mirror.algebra.LaurentPoly import (
    LaurentPoly,
    SignedMonomial,
    VarRegistry,
    substitute_monomials,
)
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape

FaceKind = Literal["HBrick", "VBrick", "CornerTopRight", "CornerBottomLeft"]

Cell = Tuple[int, int]


# ---------------------------------------------------------------------
# Variable names
# ---------------------------------------------------------------------
def x_name(i: int, j: int) -> str:
    return f"x_{{{i},{j}}}"


def p_name(i: int, j: int) -> str:
    return f"p_{{{i}x{j}}}"


def torus_cells(grid: GridShape) -> List[Cell]:
    """(i, j) for 1 <= i <= k, 1 <= j <= n-k, lexicographic."""
    return [(i, j) for i in range(1, grid.k + 1) for j in range(1, grid.cols + 1)]


def disk_registry(grid: GridShape) -> VarRegistry:
    return VarRegistry(tuple(x_name(i, j) for i, j in torus_cells(grid)))


def chart_registry(grid: GridShape) -> VarRegistry:
    """Rectangular Plucker coordinates p_{ixj}; p of the empty diagram is 1."""
    return VarRegistry(tuple(p_name(i, j) for i, j in torus_cells(grid)))


def _rect_names(rects: Iterable[Cell]) -> List[str]:
    # any rectangle with a zero side is the constant 1
    return [p_name(a, b) for a, b in rects if a > 0 and b > 0]


def _ratio(registry: VarRegistry, numerator: Iterable[str], denominator: Iterable[str]) -> LaurentPoly:
    powers: Dict[str, int] = {}
    for name in numerator:
        powers[name] = powers.get(name, 0) + 1
    for name in denominator:
        powers[name] = powers.get(name, 0) - 1
    return LaurentPoly.monomial(registry, powers)


# ---------------------------------------------------------------------
# Codimension-1 faces
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class FaceGraph:
    grid: GridShape
    kind: FaceKind
    i: int
    j: int
    normal: Tuple[int, ...]
    description: str

    def __post_init__(self) -> None:
        nonzero = [v for v in self.normal if v]
        if len(self.normal) != self.grid.cells:
            raise ValueError(f"Normal of length {len(self.normal)} for {self.grid.cells} torus coordinates")
        if not nonzero or len(nonzero) > 2 or any(abs(v) != 1 for v in nonzero):
            raise ValueError(f"Face normal {self.normal!r} must have one or two entries +-1")

    @property
    def is_primitive(self) -> bool:
        g = 0
        for v in self.normal:
            g = gcd(g, v)
        return g == 1

    def monomial(self, registry: VarRegistry) -> LaurentPoly:
        return LaurentPoly(registry, {self.normal: 1})

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "i": self.i,
            "j": self.j,
            "normal": list(self.normal),
            "description": self.description,
        }


def _normal(grid: GridShape, entries: Mapping[Cell, int]) -> Tuple[int, ...]:
    return tuple(entries.get(c, 0) for c in torus_cells(grid))


def codim1_faces(grid: GridShape) -> List[FaceGraph]:
    """HBricks, then VBricks, then the top-right and bottom-left corners."""
    k, m = grid.k, grid.cols
    faces: List[FaceGraph] = []
    for i in range(1, k):
        for j in range(1, m + 1):
            faces.append(FaceGraph(
                grid, "HBrick", i, j,
                _normal(grid, {(i, j): 1, (i + 1, j): -1}),
                f"ladder minus the interior vertical edge between boxes ({i},{j}) and ({i + 1},{j})",
            ))
    for i in range(1, k + 1):
        for j in range(1, m):
            faces.append(FaceGraph(
                grid, "VBrick", i, j,
                _normal(grid, {(i, j): -1, (i, j + 1): 1}),
                f"ladder minus the interior horizontal edge between boxes ({i},{j}) and ({i},{j + 1})",
            ))
    faces.append(FaceGraph(
        grid, "CornerTopRight", 1, m,
        _normal(grid, {(1, m): -1}),
        f"ladder minus the corner loop at box (1,{m})",
    ))
    faces.append(FaceGraph(
        grid, "CornerBottomLeft", k, 1,
        _normal(grid, {(k, 1): 1}),
        f"ladder minus the corner loop at box ({k},1)",
    ))
    return faces


def expected_face_count(grid: GridShape) -> int:
    k, m = grid.k, grid.cols
    return (k - 1) * m + k * (m - 1) + 2


def faces_frame(faces: List[FaceGraph]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "kind": f.kind,
                "i": f.i,
                "j": f.j,
                "normal": " ".join(str(v) for v in f.normal),
                "description": f.description,
            }
            for f in faces
        ],
        columns=["kind", "i", "j", "normal", "description"],
    )


# ---------------------------------------------------------------------
# Potentials
# ---------------------------------------------------------------------
def disk_potential(grid: GridShape) -> LaurentPoly:
    """
    sum x_{i,j}/x_{i+1,j} + sum x_{i,j+1}/x_{i,j} + 1/x_{1,n-k} + x_{k,1}.
    """
    reg = disk_registry(grid)
    k, m = grid.k, grid.cols
    total = LaurentPoly.zero(reg)
    for i in range(1, k):
        for j in range(1, m + 1):
            total = total + _ratio(reg, [x_name(i, j)], [x_name(i + 1, j)])
    for i in range(1, k + 1):
        for j in range(1, m):
            total = total + _ratio(reg, [x_name(i, j + 1)], [x_name(i, j)])
    total = total + _ratio(reg, [], [x_name(1, m)])
    total = total + _ratio(reg, [x_name(k, 1)], [])
    return total


def face_potential(grid: GridShape) -> LaurentPoly:
    """One coefficient-1 monomial per codimension-1 face normal."""
    reg = disk_registry(grid)
    total = LaurentPoly.zero(reg)
    for face in codim1_faces(grid):
        total = total + face.monomial(reg)
    return total


def chart_potential(grid: GridShape) -> LaurentPoly:
    """
    Superpotential restricted to the rectangular chart:

        p_{1x1}
        + sum_{i>=2, j>=1} p_{ixj} p_{(i-2)x(j-1)} / (p_{(i-1)x(j-1)} p_{(i-1)xj})
        + p_{(k-1)x(n-k-1)} / p_{kx(n-k)}
        + sum_{i>=1, j>=2} p_{ixj} p_{(i-1)x(j-2)} / (p_{(i-1)x(j-1)} p_{ix(j-1)})
    """
    reg = chart_registry(grid)
    k, m = grid.k, grid.cols
    total = _ratio(reg, _rect_names([(1, 1)]), [])
    for i in range(2, k + 1):
        for j in range(1, m + 1):
            total = total + _ratio(
                reg,
                _rect_names([(i, j), (i - 2, j - 1)]),
                _rect_names([(i - 1, j - 1), (i - 1, j)]),
            )
    total = total + _ratio(reg, _rect_names([(k - 1, m - 1)]), _rect_names([(k, m)]))
    for i in range(1, k + 1):
        for j in range(2, m + 1):
            total = total + _ratio(
                reg,
                _rect_names([(i, j), (i - 1, j - 2)]),
                _rect_names([(i - 1, j - 1), (i, j - 1)]),
            )
    return total


def theta_substitution(grid: GridShape) -> Dict[str, SignedMonomial]:
    """x_{i,j} -> p_{(k+1-i)xj} / p_{(k-i)x(j-1)}."""
    reg = chart_registry(grid)
    k = grid.k
    return {
        x_name(i, j): SignedMonomial.ratio(
            reg,
            _rect_names([(k + 1 - i, j)]),
            _rect_names([(k - i, j - 1)]),
        )
        for i, j in torus_cells(grid)
    }


def monomial_text(registry: VarRegistry, image: SignedMonomial) -> str:
    return LaurentPoly(registry, {image.exponents: image.sign}).to_text()


def verify_pullback(grid: GridShape) -> bool:
    pulled = substitute_monomials(disk_potential(grid), theta_substitution(grid), chart_registry(grid))
    return pulled.equals(chart_potential(grid))


# ---------------------------------------------------------------------
# Gr(k,n) = Gr(n-k,n)
# ---------------------------------------------------------------------
def dual_relabeling(grid: GridShape) -> Dict[str, SignedMonomial]:
    """x_{i,j} of Gr(k,n) -> x_{(n-k)+1-j, k+1-i} of Gr(n-k,n)."""
    dual = GridShape(grid.cols, grid.n)
    reg = disk_registry(dual)
    m, k = grid.cols, grid.k
    return {
        x_name(i, j): SignedMonomial.ratio(reg, [x_name(m + 1 - j, k + 1 - i)], [])
        for i, j in torus_cells(grid)
    }


def verify_self_duality(grid: GridShape) -> bool:
    dual = GridShape(grid.cols, grid.n)
    relabeled = substitute_monomials(disk_potential(grid), dual_relabeling(grid), disk_registry(dual))
    return relabeled.equals(disk_potential(dual))


# ---------------------------------------------------------------------
# Bundle
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class PotentialPair:
    grid: GridShape
    disk: LaurentPoly
    chart: LaurentPoly
    faces: Tuple[FaceGraph, ...]
    substitution: Tuple[Tuple[str, str], ...]
    pullback_holds: bool
    faces_match: bool

    def to_json(self) -> Dict[str, object]:
        return {
            "k": self.grid.k,
            "n": self.grid.n,
            "disk": self.disk.to_text(),
            "chart": self.chart.to_text(),
            "disk_terms": len(self.disk),
            "chart_terms": len(self.chart),
            "substitution": [{"variable": v, "image": img} for v, img in self.substitution],
            "faces": [f.to_json() for f in self.faces],
            "pullback_holds": self.pullback_holds,
            "faces_match": self.faces_match,
        }

    def to_text(self) -> str:
        lines = [
            f"{self.grid}",
            f"disk  ({len(self.disk)} terms): {self.disk.to_text()}",
            f"chart ({len(self.chart)} terms): {self.chart.to_text()}",
            "substitution:",
        ]
        lines += [f"  {v} -> {img}" for v, img in self.substitution]
        lines.append(f"pullback: {'holds' if self.pullback_holds else 'FAILS'}")
        return "\n".join(lines) + "\n"


class GelfandCetlinBuilder:
    def __init__(self, grid: GridShape) -> None:
        self.grid = grid

    def run(self) -> PotentialPair:
        grid = self.grid
        disk = disk_potential(grid)
        chart = chart_potential(grid)
        reg = chart_registry(grid)
        theta = theta_substitution(grid)
        pulled = substitute_monomials(disk, theta, reg)
        return PotentialPair(
            grid=grid,
            disk=disk,
            chart=chart,
            faces=tuple(codim1_faces(grid)),
            substitution=tuple((v, monomial_text(reg, img)) for v, img in theta.items()),
            pullback_holds=pulled.equals(chart),
            faces_match=face_potential(grid).equals(disk),
        )
