from __future__ import annotations

from dataclasses import dataclass
from threading import RLock
from typing import Dict, List, Sequence, Tuple


@dataclass(frozen=True)
class CycPoly:
    """
    Integer polynomial, coefficients low -> high degree.

    >>> CycPoly((1, 0, 1)).degree
    2
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError(f"Leading coefficient must be nonzero, got {coeffs!r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    @classmethod
    def x_power_minus_one(cls, n: int) -> "CycPoly":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        if not isinstance(other, CycPoly):
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CycPoly(tuple(out))

    def __str__(self) -> str:
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def reduce_mod_monic(coeffs: Sequence[int], modulus: CycPoly) -> List[int]:
    """
    Remainder of sum coeffs[e] x^e modulo a monic polynomial; exact in Z.
    Returned list has length modulus.degree (zero-padded).
    """
    if not modulus.is_monic:
        raise ValueError(f"Modulus must be monic, got {modulus}")
    deg = modulus.degree
    m = modulus.coeffs
    r = list(coeffs)
    for top in range(len(r) - 1, deg - 1, -1):
        c = r[top]
        if c:
            base = top - deg
            for t in range(deg + 1):
                if m[t]:
                    r[base + t] -= c * m[t]
    out = r[:deg]
    return out + [0] * (deg - len(out))


def divmod_monic(num: CycPoly, den: CycPoly) -> Tuple[List[int], List[int]]:
    """Long division by a monic divisor: (quotient, remainder) coefficient lists."""
    if not den.is_monic:
        raise ValueError(f"Divisor must be monic, got {den}")
    r = list(num.coeffs)
    dd = den.degree
    q = [0] * max(0, num.degree - dd + 1)
    for top in range(len(r) - 1, dd - 1, -1):
        c = r[top]
        if c:
            q[top - dd] = c
            for t in range(dd + 1):
                r[top - dd + t] -= c * den.coeffs[t]
    return q, r[:dd]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_PHI_CACHE: Dict[int, CycPoly] = {}
_PHI_LOCK = RLock()


def cyclotomic_polynomial(N: int) -> CycPoly:
    """
    Phi_N by exact division of x^N - 1 by the product of Phi_d, d | N, d < N.
    Cached per order; the cache is filled under a lock.

    >>> str(cyclotomic_polynomial(10))
    'x^4 - x^3 + x^2 - x + 1'
    """
    if N < 1:
        raise ValueError(f"Cyclotomic order must be >= 1, got {N!r}")

    cached = _PHI_CACHE.get(N)
    if cached is not None:
        return cached

    with _PHI_LOCK:
        cached = _PHI_CACHE.get(N)
        if cached is not None:
            return cached

        divisor = CycPoly((1,))
        for d in range(1, N):
            if N % d == 0:
                divisor = divisor * cyclotomic_polynomial(d)

        quotient, remainder = divmod_monic(CycPoly.x_power_minus_one(N), divisor)
        if any(remainder):
            raise ArithmeticError(f"x^{N} - 1 is not divisible by prod Phi_d (d < {N})")

        phi = CycPoly(tuple(quotient))
        _PHI_CACHE[N] = phi
        return phi
