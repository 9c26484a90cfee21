from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from grassmannian_mirror.algebra.CycInt import CycInt, cyc_sum
from grassmannian_mirror.combinatorics.YoungDiagram import (
    GridShape,
    YoungDiagram,
    enumerate_diagrams,
    pieri_expand,
)


@dataclass(frozen=True, eq=False)
class PieriMatrix:
    """
    Matrix of quantum multiplication by the one-box class at q = 1.

    Rows and columns follow enumerate_diagrams; entry (d', d) is 1 iff d'
    appears in pieri_expand(d). c_1 acts as n times this matrix.
    """

    grid: GridShape
    diagrams: Tuple[YoungDiagram, ...]
    matrix: np.ndarray
    _rows: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False)
    _index: Dict[YoungDiagram, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)
        rows = tuple(tuple(int(j) for j in np.flatnonzero(self.matrix[i])) for i in range(len(self.diagrams)))
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_index", {d: i for i, d in enumerate(self.diagrams)})

    @property
    def dimension(self) -> int:
        return len(self.diagrams)

    def index(self, d: YoungDiagram) -> int:
        return self._index[d]

    def column(self, d: YoungDiagram) -> List[YoungDiagram]:
        j = self.index(d)
        return [self.diagrams[i] for i in np.flatnonzero(self.matrix[:, j])]

    def apply(self, vector: Sequence[CycInt]) -> List[CycInt]:
        """(P v)_{d'} = sum of v_d over d with d' in pieri_expand(d)."""
        if len(vector) != self.dimension:
            raise ValueError(f"Vector of length {len(vector)} for a {self.dimension}-dim matrix")
        order = vector[0].order
        return [cyc_sum((vector[j] for j in row), order) for row in self._rows]


class PieriMatrixBuilder:
    def __init__(self, grid: GridShape) -> None:
        self.grid = grid

    def build(self) -> PieriMatrix:
        diagrams = tuple(enumerate_diagrams(self.grid))
        index: Dict[YoungDiagram, int] = {d: i for i, d in enumerate(diagrams)}
        mat = np.zeros((len(diagrams), len(diagrams)), dtype=np.int8)

        for j, d in enumerate(diagrams):
            for target in pieri_expand(d).terms():
                mat[index[target], j] = 1

        return PieriMatrix(grid=self.grid, diagrams=diagrams, matrix=mat)


def pieri_matrix(grid: GridShape) -> PieriMatrix:
    return PieriMatrixBuilder(grid).build()
