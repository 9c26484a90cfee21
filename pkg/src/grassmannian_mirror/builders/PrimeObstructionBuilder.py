from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List, Tuple

import pandas as pd

from grassmannian_mirror.algebra.CycInt import CycInt
from grassmannian_mirror.algebra.SchurEvaluator import hook_content_count, hooks_and_contents
from grassmannian_mirror.core.constants import MAX_VANISHING_SUBSUM_PRIME


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class RectangleObstruction:
    height: int
    width: int
    count: int
    divisible: bool
    content_hit: bool


@dataclass(frozen=True)
class PrimeObstructionReport:
    """
    For n = p prime: S_{j x i}(1, ..., 1) in m = p - k variables over every
    rectangle of the (p-k) x k grid. None of these counts is divisible by p
    and no box content is congruent to k mod p.
    """

    k: int
    p: int
    rows: Tuple[RectangleObstruction, ...]

    @property
    def passed(self) -> bool:
        return not any(r.divisible or r.content_hit for r in self.rows)

    def failures(self) -> List[RectangleObstruction]:
        return [r for r in self.rows if r.divisible or r.content_hit]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [vars(r) for r in self.rows],
            columns=["height", "width", "count", "divisible", "content_hit"],
        )


def prime_obstruction_report(k: int, p: int) -> PrimeObstructionReport:
    if not is_prime(p):
        raise ValueError(f"prime_obstruction_report needs a prime p, got {p!r}")
    if not (1 <= k < p):
        raise ValueError(f"Need 1 <= k < p, got k={k!r}, p={p!r}")
    m = p - k
    rows = []
    for height in range(1, m + 1):
        for width in range(1, k + 1):
            shape = (width,) * height
            count = hook_content_count(shape, m)
            hit = any((c - k) % p == 0 for _, c in hooks_and_contents(shape))
            rows.append(RectangleObstruction(height, width, count, count % p == 0, hit))
    return PrimeObstructionReport(k, p, tuple(rows))


def vanishing_subsums(p: int) -> List[Tuple[int, ...]]:
    """
    Every subset of the p-th roots of unity (as exponent tuples) whose sum
    is zero. For prime p only the empty and the full set appear.
    """
    if not is_prime(p):
        raise ValueError(f"vanishing_subsums needs a prime p, got {p!r}")
    if p > MAX_VANISHING_SUBSUM_PRIME:
        raise ValueError(f"Exhaustive subset sweep is limited to p <= {MAX_VANISHING_SUBSUM_PRIME}, got {p!r}")
    out = []
    for mask in product((0, 1), repeat=p):
        if CycInt(p, mask).is_zero():
            out.append(tuple(e for e, bit in enumerate(mask) if bit))
    return sorted(out, key=lambda s: (len(s), s))
