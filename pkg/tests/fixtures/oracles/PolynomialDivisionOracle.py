from __future__ import annotations

from math import gcd
from typing import List, Sequence

import numpy as np


def cyclotomic_from_roots(N: int) -> List[int]:
    """Phi_N, low -> high, from numpy.poly over the primitive N-th roots."""
    prim = [np.exp(2j * np.pi * a / N) for a in range(1, N + 1) if gcd(a, N) == 1]
    high_to_low = np.real(np.poly(prim))
    return [int(round(c)) for c in high_to_low[::-1]]


def remainder_by_long_division(coeffs: Sequence[int], modulus: Sequence[int]) -> List[int]:
    """Schoolbook division by a monic integer polynomial (low -> high)."""
    r = list(coeffs)
    d = len(modulus) - 1
    while len(r) - 1 >= d and any(r[d:]):
        top = max(i for i, c in enumerate(r) if c)
        if top < d:
            break
        c = r[top]
        for t, mc in enumerate(modulus):
            r[top - d + t] -= c * mc
    return (r + [0] * d)[:d]


def brute_force_is_zero(coeffs: Sequence[int], N: int) -> bool:
    return not any(remainder_by_long_division(coeffs, cyclotomic_from_roots(N)))
