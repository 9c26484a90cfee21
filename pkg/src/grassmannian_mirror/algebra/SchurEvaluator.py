from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from grassmannian_mirror.algebra.CycInt import CycInt, cyc_product
from grassmannian_mirror.algebra.ExactDeterminant import determinant, monomial_determinant
from grassmannian_mirror.algebra.RootSet import RootSet
from grassmannian_mirror.combinatorics.YoungDiagram import (
    GridShape,
    YoungDiagram,
    enumerate_diagrams,
    poincare_dual,
)
from grassmannian_mirror.core.errors import DiagramError, RootSetError

# A shape is anything with weakly decreasing `rows`; trailing zeros are ignored.
Shape = Sequence[int]


def _parts(lam: YoungDiagram | Shape) -> Tuple[int, ...]:
    rows = lam.rows if isinstance(lam, YoungDiagram) else tuple(lam)
    return tuple(r for r in rows if r > 0)


def _check_fits(parts: Tuple[int, ...], m: int) -> None:
    if len(parts) > m:
        raise DiagramError(
            f"Shape {parts!r} has {len(parts)} rows but only {m} variables are available"
        )


def _conjugate(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for r in parts if r >= j) for j in range(1, parts[0] + 1))


# ---------------------------------------------------------------------
# Semistandard tableaux (reference oracle)
# ---------------------------------------------------------------------
def ssyt_tableaux(lam: YoungDiagram | Shape, m: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """
    Semistandard tableaux of shape lam with labels 1..m, filled row by row:
    rows weakly increase, columns strictly increase.
    """
    parts = _parts(lam)
    _check_fits(parts, m)
    cells = [(r, c) for r, length in enumerate(parts) for c in range(length)]
    filling: List[List[int]] = [[0] * length for length in parts]

    def fill(idx: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in filling)
            return
        r, c = cells[idx]
        low = 1
        if c > 0:
            low = max(low, filling[r][c - 1])
        if r > 0:
            low = max(low, filling[r - 1][c] + 1)
        # rows below still need strictly larger labels in this column
        high = m - (len(_column_below(parts, r, c)))
        for label in range(low, high + 1):
            filling[r][c] = label
            yield from fill(idx + 1)
        filling[r][c] = 0

    yield from fill(0)


def _column_below(parts: Tuple[int, ...], r: int, c: int) -> List[int]:
    return [rr for rr in range(r + 1, len(parts)) if parts[rr] > c]


def count_ssyt(lam: YoungDiagram | Shape, m: int) -> int:
    return sum(1 for _ in ssyt_tableaux(lam, m))


def schur_ssyt(lam: YoungDiagram | Shape, I: RootSet) -> CycInt:
    """Sum over tableaux T of prod zeta_{label}: the reference Schur value."""
    parts = _parts(lam)
    m = I.size
    _check_fits(parts, m)
    exps = I.exponents
    N = I.order
    counts: Dict[int, int] = {}
    for tableau in ssyt_tableaux(parts, m):
        e = sum(exps[label - 1] for row in tableau for label in row) % N
        counts[e] = counts.get(e, 0) + 1
    return CycInt.from_exponent_counts(N, counts)


# ---------------------------------------------------------------------
# Elementary symmetric values and dual Jacobi-Trudi (fast path)
# ---------------------------------------------------------------------
def elementary_symmetric_values(I: RootSet) -> List[CycInt]:
    """e_0..e_m at I, read off prod (1 + zeta t)."""
    N = I.order
    e: List[CycInt] = [CycInt.one(N)]
    for z in I.exponents:
        nxt = e + [CycInt.zero(N)]
        for j in range(len(e), 0, -1):
            nxt[j] = nxt[j] + e[j - 1].shift(z)
        e = nxt
    return e


def schur_jacobi_trudi(lam: YoungDiagram | Shape, I: RootSet) -> CycInt:
    """det(e_{lam'_i - i + j}) with lam' the conjugate shape."""
    parts = _parts(lam)
    m = I.size
    _check_fits(parts, m)
    conj = _conjugate(parts)
    if not conj:
        return CycInt.one(I.order)

    e = _cached_elementary(I)
    zero = CycInt.zero(I.order)
    L = len(conj)

    def entry(idx: int) -> CycInt:
        return e[idx] if 0 <= idx <= m else zero

    matrix = [[entry(conj[i] - i + j) for j in range(L)] for i in range(L)]
    return determinant(matrix, I.order)


@lru_cache(maxsize=4096)
def _cached_elementary(I: RootSet) -> Tuple[CycInt, ...]:
    return tuple(elementary_symmetric_values(I))


def schur_value(lam: YoungDiagram | Shape, I: RootSet) -> CycInt:
    """Default evaluation route (dual Jacobi-Trudi)."""
    return _cached_schur(_parts(lam), I)


@lru_cache(maxsize=65536)
def _cached_schur(parts: Tuple[int, ...], I: RootSet) -> CycInt:
    return schur_jacobi_trudi(parts, I)


# ---------------------------------------------------------------------
# Bialternant
# ---------------------------------------------------------------------
def alternant_exponent_rows(lam: YoungDiagram | Shape, I: RootSet) -> List[List[int]]:
    """Row r (1..m) holds zeta_j^(lam_{m+1-r} + r - 1)."""
    parts = _parts(lam)
    m = I.size
    _check_fits(parts, m)
    padded = parts + (0,) * (m - len(parts))
    rows = []
    for r in range(1, m + 1):
        power = padded[m - r] + r - 1
        rows.append([power * e for e in I.exponents])
    return rows


def alternant(lam: YoungDiagram | Shape, I: RootSet) -> CycInt:
    return monomial_determinant(alternant_exponent_rows(lam, I), I.order)


def vandermonde(I: RootSet) -> CycInt:
    """prod_{i<j} (zeta_j - zeta_i) in sorted exponent order; never zero."""
    N = I.order
    zs = I.values()
    return cyc_product(
        (zs[j] - zs[i] for i in range(len(zs)) for j in range(i + 1, len(zs))),
        N,
    )


# ---------------------------------------------------------------------
# Hook-content formula
# ---------------------------------------------------------------------
def hooks_and_contents(lam: YoungDiagram | Shape) -> List[Tuple[int, int]]:
    """(hook length, content) per box, row-major."""
    parts = _parts(lam)
    conj = _conjugate(parts)
    out = []
    for r, length in enumerate(parts):
        for c in range(length):
            arm = length - c - 1
            leg = conj[c] - r - 1
            out.append((arm + leg + 1, c - r))
    return out


def hook_content_count(lam: YoungDiagram | Shape, m: int) -> int:
    """prod (m + c(u)) / prod h(u), accumulated exactly and divided once."""
    parts = _parts(lam)
    _check_fits(parts, m)
    num, den = 1, 1
    for hook, content in hooks_and_contents(parts):
        num *= m + content
        den *= hook
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"hook-content quotient not integral for {parts!r}, m={m}")
    return q


# ---------------------------------------------------------------------
# Poincare-dual relation
# ---------------------------------------------------------------------
def poincare_dual_constant(I: RootSet, grid: GridShape) -> CycInt:
    """S_full(I) in closed form: the m x c rectangle gives (prod zeta)^c, a single root of unity."""
    if grid.k != I.size:
        raise RootSetError(f"Grid {grid} needs {grid.k} roots, got {I.size}")
    return CycInt.zeta(I.order, grid.cols * sum(I.exponents))


def poincare_dual_failures(I: RootSet, grid: GridShape) -> List[YoungDiagram]:
    """
    For the m x c grid `grid` (m = |I| rows) and roots on the unit circle:
    S_{PD(d)}(I) == c_I * conj S_d(I) for every diagram d, with c_I the
    closed-form constant above. The empty diagram compares S_full(I) with c_I.
    """
    c_I = poincare_dual_constant(I, grid)
    return [
        d for d in enumerate_diagrams(grid)
        if schur_value(poincare_dual(d), I) != c_I * schur_value(d, I).conj()
    ]
