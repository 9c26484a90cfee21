from __future__ import annotations

from typing import Dict, List, Sequence

from grassmannian_mirror.algebra.CycInt import CycInt


# ---------------------------------------------------------------------
# Division-free determinants over Z[zeta_N]
#
# Laplace expansion row by row, memoised over column subsets:
# D[S] = det(rows 0..|S|-1, columns S). Only structurally non-zero entries
# are expanded, and a subset is dropped as soon as it misses a column that
# no later row can fill. Banded matrices such as dual Jacobi-Trudi then
# keep O(C(2w, w)) live subsets for band width w instead of 2^m.
# No division, so no Euclidean structure is needed.
# ---------------------------------------------------------------------


def _popcount_order(m: int) -> List[List[int]]:
    by_size: List[List[int]] = [[] for _ in range(m + 1)]
    for mask in range(1 << m):
        by_size[bin(mask).count("1")].append(mask)
    return by_size


def _required_masks(matrix: Sequence[Sequence[CycInt]]) -> List[int] | None:
    """
    required[s]: columns whose last non-zero entry lies in rows 0..s-1;
    a live subset after s rows must contain all of them. None when some
    column is entirely zero.
    """
    m = len(matrix)
    required = [0] * (m + 1)
    for col in range(m):
        last = max((r for r in range(m) if not _is_literally_zero(matrix[r][col])), default=-1)
        if last < 0:
            return None
        for s in range(last + 1, m + 1):
            required[s] |= 1 << col
    return required


def determinant(matrix: Sequence[Sequence[CycInt]], order: int) -> CycInt:
    """Exact determinant of a square CycInt matrix (empty matrix -> 1)."""
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        raise ValueError(f"determinant needs a square matrix, got {m} rows of lengths "
                         f"{[len(r) for r in matrix]}")
    if m == 0:
        return CycInt.one(order)

    required = _required_masks(matrix)
    if required is None:
        return CycInt.zero(order)

    live: Dict[int, CycInt] = {0: CycInt.one(order)}
    for r in range(m):
        entries = [(col, a) for col, a in enumerate(matrix[r]) if not _is_literally_zero(a)]
        need = required[r + 1]
        nxt: Dict[int, CycInt] = {}
        for mask, minor in live.items():
            for col, a in entries:
                bit = 1 << col
                if mask & bit:
                    continue
                new_mask = mask | bit
                if new_mask & need != need:
                    continue
                pos = bin(mask & (bit - 1)).count("1")
                term = a * minor
                prev = nxt.get(new_mask)
                if (r + pos) % 2:
                    nxt[new_mask] = -term if prev is None else prev - term
                else:
                    nxt[new_mask] = term if prev is None else prev + term
        live = {mask: v for mask, v in nxt.items() if not _is_literally_zero(v)}
        if not live:
            return CycInt.zero(order)

    return live.get((1 << m) - 1, CycInt.zero(order))



def monomial_determinant(exponent_rows: Sequence[Sequence[int]], order: int) -> CycInt:
    """
    det(zeta_N^{E[r][c]}) for an integer exponent matrix E. Entries are
    units, so every Laplace step is a coefficient shift rather than a
    full ring multiplication.
    """
    m = len(exponent_rows)
    if any(len(row) != m for row in exponent_rows):
        raise ValueError("monomial_determinant needs a square exponent matrix")
    if m == 0:
        return CycInt.one(order)

    N = order
    by_size = _popcount_order(m)
    table: Dict[int, List[int]] = {0: [1] + [0] * (N - 1)}

    for size in range(1, m + 1):
        row = exponent_rows[size - 1]
        for mask in by_size[size]:
            acc = [0] * N
            pos = 0
            for col in range(m):
                bit = 1 << col
                if not mask & bit:
                    continue
                minor = table[mask ^ bit]
                s = row[col] % N
                sgn = -1 if (size - 1 + pos) % 2 else 1
                for e, c in enumerate(minor):
                    if c:
                        acc[(e + s) % N] += sgn * c
                pos += 1
            table[mask] = acc
        for mask in by_size[size - 1]:
            table.pop(mask, None)

    return CycInt(N, tuple(table[(1 << m) - 1]))


def _is_literally_zero(a: CycInt) -> bool:
    # cheap structural test; exact zero tests go through CycInt.is_zero
    return not any(a.coeffs)
