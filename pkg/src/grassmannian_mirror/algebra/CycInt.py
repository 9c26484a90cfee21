from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from grassmannian_mirror.algebra.CyclotomicPolynomial import (
    cyclotomic_polynomial,
    reduce_mod_monic,
)
from grassmannian_mirror.core.constants import TO_COMPLEX_ERROR_PER_UNIT
from grassmannian_mirror.core.errors import RingMismatchError


@lru_cache(maxsize=None)
def _unit_roots(order: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(order) / order)


@dataclass(frozen=True, eq=False)
class CycInt:
    """
    Element of Z[zeta_N] in group-ring form: coeffs[e] multiplies zeta_N^e.

    Arithmetic runs modulo x^N - 1. Equality, hashing and zero tests reduce
    modulo Phi_N, so two different coefficient vectors may be equal.

    >>> z = CycInt.zeta(10, 5)
    >>> (z + CycInt.one(10)).is_zero()
    True
    """

    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order!r}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(
                f"CycInt of order {self.order} needs {self.order} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "CycInt":
        return cls(order, (0,) * order)

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycInt":
        coeffs = [0] * order
        coeffs[0] = int(value)
        return cls(order, tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "CycInt":
        return cls.from_int(order, 1)

    @classmethod
    def zeta(cls, order: int, exponent: int = 1) -> "CycInt":
        coeffs = [0] * order
        coeffs[exponent % order] = 1
        return cls(order, tuple(coeffs))

    @classmethod
    def from_exponent_counts(cls, order: int, counts: Dict[int, int]) -> "CycInt":
        coeffs = [0] * order
        for e, c in counts.items():
            coeffs[e % order] += c
        return cls(order, tuple(coeffs))

    # ------------------------------------------------------------------
    # Exact zero test / equality
    # ------------------------------------------------------------------
    @cached_property
    def reduced(self) -> Tuple[int, ...]:
        """Remainder modulo Phi_N, length phi(N)."""
        return tuple(reduce_mod_monic(self.coeffs, cyclotomic_polynomial(self.order)))

    def is_zero(self) -> bool:
        return not any(self.reduced)

    def canonical(self) -> "CycInt":
        """Unique representative: the Phi_N remainder padded to length N."""
        red = list(self.reduced)
        return CycInt(self.order, tuple(red + [0] * (self.order - len(red))))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.from_int(self.order, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.order != self.order:
            return False
        return self.reduced == other.reduced

    def __hash__(self) -> int:
        return hash((self.order, self.reduced))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    def _check(self, other: "CycInt") -> None:
        if other.order != self.order:
            raise RingMismatchError(
                f"Incompatible rings: Z[zeta_{self.order}] vs Z[zeta_{other.order}]"
            )

    def _coerce(self, other: object) -> "CycInt | None":
        if isinstance(other, CycInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.order, other)
        return None

    def __add__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: object) -> "CycInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.order, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        N = self.order
        out = [0] * N
        rhs = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in rhs:
                    out[(i + j) % N] += a * b
        return CycInt(N, tuple(out))

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "CycInt":
        """Multiplication by zeta_N^exponent (a cyclic index shift)."""
        N = self.order
        s = exponent % N
        if s == 0:
            return self
        return CycInt(N, self.coeffs[-s:] + self.coeffs[:-s])

    def rotate(self) -> "CycInt":
        """Multiplication by zeta_N^2, i.e. by exp(2 pi i / n) when N = 2n."""
        return self.shift(2)

    def conj(self) -> "CycInt":
        N = self.order
        return CycInt(N, tuple(self.coeffs[(N - e) % N] for e in range(N)))

    # ------------------------------------------------------------------
    # Float side
    # ------------------------------------------------------------------
    def to_complex(self) -> complex:
        """
        sum coeffs[e] exp(2 pi i e / N); absolute error <= error_bound().
        """
        if not any(self.coeffs):
            return 0j
        values = np.asarray([float(c) for c in self.coeffs])
        return complex(np.dot(values, _unit_roots(self.order)))

    def error_bound(self) -> float:
        return sum(abs(c) for c in self.coeffs) * TO_COMPLEX_ERROR_PER_UNIT

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------
    def to_json(self) -> Dict[str, object]:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self) -> str:
        terms = [f"{c}*z^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"CycInt[{self.order}](" + (" + ".join(terms) if terms else "0") + ")"


# ---------------------------------------------------------------------
# Function forms of the ring operations
# ---------------------------------------------------------------------
def is_zero(a: CycInt) -> bool:
    return a.is_zero()


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def sub(a: CycInt, b: CycInt) -> CycInt:
    return a - b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def conj(a: CycInt) -> CycInt:
    return a.conj()


def rotate(a: CycInt) -> CycInt:
    return a.rotate()


def to_complex(a: CycInt) -> complex:
    return a.to_complex()


def cyc_sum(values: Iterable[CycInt], order: int) -> CycInt:
    acc = [0] * order
    for v in values:
        if v.order != order:
            raise RingMismatchError(f"Incompatible rings: Z[zeta_{order}] vs Z[zeta_{v.order}]")
        for e, c in enumerate(v.coeffs):
            if c:
                acc[e] += c
    return CycInt(order, tuple(acc))


def cyc_product(values: Iterable[CycInt], order: int) -> CycInt:
    acc = CycInt.one(order)
    for v in values:
        acc = acc * v
    return acc


def proportionality_failures(u: Sequence[CycInt], w: Sequence[CycInt]) -> List[int]:
    """
    Indices where u is not a scalar multiple of w, decided by
    cross-multiplication u_i w_ref == u_ref w_i against the first index
    with w_ref != 0. A zero pair at ref (or a length mismatch) fails all.
    """
    if len(u) != len(w):
        return list(range(max(len(u), len(w))))
    ref = next((i for i, x in enumerate(w) if not x.is_zero()), None)
    if ref is None:
        return [i for i, x in enumerate(u) if not x.is_zero()]
    if u[ref].is_zero():
        return list(range(len(u)))
    return [i for i in range(len(u)) if u[i] * w[ref] != u[ref] * w[i]]
