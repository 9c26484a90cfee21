from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Literal, Optional, Tuple

from grassmannian_mirror.core.errors import DiagramError, InvalidGridError

StepKind = Literal["vertical", "horizontal"]
RectangleClass = Literal["not-rectangular", "boundary", "interior"]


# ---------------------------------------------------------------------
# Grid
# ---------------------------------------------------------------------
@dataclass(frozen=True, order=True)
class GridShape:
    """k rows and n-k columns; 1 <= k < n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise InvalidGridError(f"k and n must be integers, got k={self.k!r}, n={self.n!r}")
        if not (1 <= self.k < self.n):
            raise InvalidGridError(f"Invalid grid: need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def cells(self) -> int:
        return self.k * (self.n - self.k)

    def transposed(self) -> "GridShape":
        """The (n-k) x k grid."""
        return GridShape(self.n - self.k, self.n)

    def __str__(self) -> str:
        return f"Gr({self.k},{self.n})"


# ---------------------------------------------------------------------
# Diagram
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class YoungDiagram:
    grid: GridShape
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)

        if len(rows) != self.grid.k:
            raise DiagramError(
                f"Diagram in {self.grid} needs {self.grid.k} rows, got {rows!r}"
            )
        if any(r < 0 or r > self.grid.cols for r in rows):
            raise DiagramError(
                f"Row lengths must lie in [0, {self.grid.cols}], got {rows!r}"
            )
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise DiagramError(f"Rows must be weakly decreasing, got {rows!r}")

    # ---- constructors ----
    @classmethod
    def empty(cls, grid: GridShape) -> "YoungDiagram":
        return cls(grid, (0,) * grid.k)

    @classmethod
    def full(cls, grid: GridShape) -> "YoungDiagram":
        return cls(grid, (grid.cols,) * grid.k)

    @classmethod
    def of(cls, grid: GridShape, *rows: int) -> "YoungDiagram":
        """Short rows are padded with zeros: YoungDiagram.of(g, 3, 1)."""
        padded = tuple(rows) + (0,) * (grid.k - len(rows))
        return cls(grid, padded)

    # ---- basic properties ----
    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    @property
    def length(self) -> int:
        """Number of nonzero rows."""
        return sum(1 for r in self.rows if r > 0)

    def to_json(self) -> Dict[str, object]:
        return {"rows": list(self.rows), "k": self.grid.k, "n": self.grid.n}

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.rows) + ")"


@dataclass(frozen=True)
class StepSet:
    elements: Tuple[int, ...]
    kind: StepKind

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------
# Step encodings
# ---------------------------------------------------------------------
def border_steps(d: YoungDiagram) -> Tuple[StepSet, StepSet]:
    """
    Steps of the border path from the top-right grid corner (step 1) to the
    bottom-left corner (step n). Vertical positions follow
    v_j = (n-k) - d_j + j.
    """
    grid = d.grid
    vertical = tuple(grid.cols - d.rows[j - 1] + j for j in range(1, grid.k + 1))
    vset = set(vertical)
    horizontal = tuple(t for t in range(1, grid.n + 1) if t not in vset)
    return StepSet(vertical, "vertical"), StepSet(horizontal, "horizontal")


def vertical_steps(d: YoungDiagram) -> Tuple[int, ...]:
    return border_steps(d)[0].elements


def horizontal_steps(d: YoungDiagram) -> Tuple[int, ...]:
    return border_steps(d)[1].elements


def diagram_from_vertical_steps(grid: GridShape, steps) -> YoungDiagram:
    v = sorted(int(s) for s in steps)
    if len(v) != grid.k or len(set(v)) != grid.k or v[0] < 1 or v[-1] > grid.n:
        raise DiagramError(f"Not a vertical step set of {grid}: {tuple(steps)!r}")
    return YoungDiagram(grid, tuple(grid.cols - v[j - 1] + j for j in range(1, grid.k + 1)))


def diagram_from_horizontal_steps(grid: GridShape, steps) -> YoungDiagram:
    h = set(int(s) for s in steps)
    if len(h) != grid.cols or any(s < 1 or s > grid.n for s in h):
        raise DiagramError(f"Not a horizontal step set of {grid}: {tuple(steps)!r}")
    return diagram_from_vertical_steps(grid, [t for t in range(1, grid.n + 1) if t not in h])


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------
@lru_cache(maxsize=None)
def _enumerate(grid: GridShape) -> Tuple[YoungDiagram, ...]:
    diagrams = [
        diagram_from_vertical_steps(grid, steps)
        for steps in combinations(range(1, grid.n + 1), grid.k)
    ]
    # graded by box count, lexicographic on vertical steps inside a grade
    diagrams.sort(key=diagram_sort_key)
    return tuple(diagrams)


def diagram_sort_key(d: YoungDiagram) -> Tuple[int, Tuple[int, ...]]:
    return d.size, vertical_steps(d)


def enumerate_diagrams(grid: GridShape) -> List[YoungDiagram]:
    """All C(n,k) diagrams; first is the empty diagram, last the full grid."""
    return list(_enumerate(grid))


# ---------------------------------------------------------------------
# Involutions
# ---------------------------------------------------------------------
def transpose(d: YoungDiagram) -> YoungDiagram:
    """Diagram in the (n-k) x k grid; row j counts the rows i with d_i >= j."""
    t_grid = d.grid.transposed()
    return YoungDiagram(
        t_grid,
        tuple(sum(1 for r in d.rows if r >= j) for j in range(1, t_grid.k + 1)),
    )


def poincare_dual(d: YoungDiagram) -> YoungDiagram:
    """Complement in the grid, rotated by pi: PD(d)_i = (n-k) - d_{k+1-i}."""
    k = d.grid.k
    return YoungDiagram(d.grid, tuple(d.grid.cols - d.rows[k - i] for i in range(1, k + 1)))


# ---------------------------------------------------------------------
# Rectangles
# ---------------------------------------------------------------------
def rectangle(grid: GridShape, height: int, width: int) -> YoungDiagram:
    """The height x width rectangle; any zero side gives the empty diagram."""
    if not (0 <= height <= grid.k and 0 <= width <= grid.cols):
        raise DiagramError(f"Rectangle {height}x{width} does not fit in {grid}")
    if height == 0 or width == 0:
        return YoungDiagram.empty(grid)
    return YoungDiagram(grid, (width,) * height + (0,) * (grid.k - height))


def rectangle_dims(d: YoungDiagram) -> Optional[Tuple[int, int]]:
    """(height, width) when d is rectangular, else None; the empty diagram is (0, 0)."""
    nonzero = [r for r in d.rows if r > 0]
    if not nonzero:
        return 0, 0
    if len(set(nonzero)) != 1:
        return None
    return len(nonzero), nonzero[0]


def classify_rectangle(d: YoungDiagram) -> RectangleClass:
    dims = rectangle_dims(d)
    if dims is None:
        return "not-rectangular"
    height, width = dims
    if d.is_empty or height == d.grid.k or width == d.grid.cols:
        return "boundary"
    return "interior"


def enumerate_rectangles(grid: GridShape) -> List[YoungDiagram]:
    """k(n-k)+1 rectangles: the empty one, then i x j in lexicographic (i, j)."""
    out = [YoungDiagram.empty(grid)]
    for i in range(1, grid.k + 1):
        for j in range(1, grid.cols + 1):
            out.append(rectangle(grid, i, j))
    return out


def boundary_rectangles(grid: GridShape) -> List[YoungDiagram]:
    """
    p_1, ..., p_n: the t-th has horizontal steps {1, ..., n-k} shifted
    cyclically by t-1 (values taken in 1..n).
    """
    out = []
    for t in range(grid.n):
        steps = [((s - 1 + t) % grid.n) + 1 for s in range(1, grid.cols + 1)]
        out.append(diagram_from_horizontal_steps(grid, steps))
    return out


# ---------------------------------------------------------------------
# Quantum Pieri
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class PieriExpansion:
    classical: Tuple[YoungDiagram, ...]
    quantum: Optional[YoungDiagram]

    def terms(self) -> Tuple[YoungDiagram, ...]:
        return self.classical + ((self.quantum,) if self.quantum is not None else ())


def add_box_diagrams(d: YoungDiagram) -> Tuple[YoungDiagram, ...]:
    rows = d.rows
    out = []
    for i in range(d.grid.k):
        bound = d.grid.cols if i == 0 else rows[i - 1]
        if rows[i] < bound:
            new = list(rows)
            new[i] += 1
            out.append(YoungDiagram(d.grid, tuple(new)))
    return tuple(out)


def pieri_hat(d: YoungDiagram) -> Optional[YoungDiagram]:
    """Erase the full first row and full first column; None when either is not full."""
    if d.rows[0] != d.grid.cols or d.rows[-1] < 1:
        return None
    return YoungDiagram(d.grid, tuple(r - 1 for r in d.rows[1:]) + (0,))


def pieri_expand(d: YoungDiagram) -> PieriExpansion:
    return PieriExpansion(classical=add_box_diagrams(d), quantum=pieri_hat(d))
