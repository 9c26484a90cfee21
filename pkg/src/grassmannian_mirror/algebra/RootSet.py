from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import cos, pi
from typing import List, Tuple

from grassmannian_mirror.algebra.CycInt import CycInt
from grassmannian_mirror.core.errors import RootSetError


@dataclass(frozen=True, order=True)
class RootSet:
    """
    m distinct roots of x^n = sign, stored as exponents of zeta_{2n}
    (even exponents for sign +1, odd ones for sign -1), sorted.
    """

    n: int
    exponents: Tuple[int, ...]
    sign: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RootSetError(f"n must be >= 1, got {self.n!r}")
        if self.sign not in (1, -1):
            raise RootSetError(f"sign must be +1 or -1, got {self.sign!r}")

        N = 2 * self.n
        exps = tuple(sorted(int(e) % N for e in self.exponents))
        if len(set(exps)) != len(exps):
            raise RootSetError(f"Exponents must be distinct mod {N}, got {self.exponents!r}")

        parity = 0 if self.sign == 1 else 1
        bad = [e for e in exps if e % 2 != parity]
        if bad:
            raise RootSetError(
                f"Exponents {bad!r} are not roots of x^{self.n} = {self.sign:+d} "
                f"(expected {'even' if parity == 0 else 'odd'} residues mod {N})"
            )
        object.__setattr__(self, "exponents", exps)

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def size(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def values(self) -> List[CycInt]:
        return [CycInt.zeta(self.order, e) for e in self.exponents]

    def floats(self) -> List[complex]:
        return [CycInt.zeta(self.order, e).to_complex() for e in self.exponents]

    # ---- dihedral generators ----
    def rotate(self, times: int = 1) -> "RootSet":
        """Multiply every root by exp(2 pi i / n), `times` times."""
        return RootSet(self.n, tuple(e + 2 * times for e in self.exponents), self.sign)

    def conj(self) -> "RootSet":
        return RootSet(self.n, tuple(-e for e in self.exponents), self.sign)

    # ---- complements ----
    def complement(self) -> "RootSet":
        """The remaining roots of x^n = sign."""
        present = set(self.exponents)
        parity = 0 if self.sign == 1 else 1
        return RootSet(
            self.n,
            tuple(e for e in range(parity, self.order, 2) if e not in present),
            self.sign,
        )

    def negate(self) -> "RootSet":
        """-I: roots of x^n = (-1)^n sign."""
        new_sign = self.sign * (-1 if self.n % 2 else 1)
        return RootSet(self.n, tuple(e + self.n for e in self.exponents), new_sign)

    def to_json(self) -> List[int]:
        return list(self.exponents)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.exponents) + f"}} mod {self.order}"


def qh_sign(k: int) -> int:
    """Quantum side: roots of x^n = (-1)^(k+1)."""
    return 1 if (k + 1) % 2 == 0 else -1


def mirror_sign(k: int, n: int) -> int:
    """Mirror side: roots of x^n = (-1)^(n-k+1)."""
    return 1 if (n - k + 1) % 2 == 0 else -1


def enumerate_rootsets(n: int, m: int, sign: int) -> List[RootSet]:
    """All C(n,m) subsets, ordered by sorted exponent tuple."""
    if not (1 <= m <= n):
        raise RootSetError(f"Need 1 <= m <= n, got m={m!r}, n={n!r}")
    if sign not in (1, -1):
        raise RootSetError(f"sign must be +1 or -1, got {sign!r}")
    parity = 0 if sign == 1 else 1
    residues = range(parity, 2 * n, 2)
    return [RootSet(n, combo, sign) for combo in combinations(residues, m)]


def complement_labeling(I: RootSet) -> RootSet:
    """J = -I^c: maps a mirror root set to the matching quantum-side one."""
    return I.complement().negate()


def closest_to_one(n: int, m: int, sign: int) -> RootSet:
    """
    The m roots of x^n = sign with the largest real parts; this maximises
    sum cos(2 pi e / 2n). The optimum is the symmetric set
    {+-(m-1), +-(m-3), ...} when the parity fits, which it does on both sides.
    """
    parity = 0 if sign == 1 else 1
    residues = list(range(parity, 2 * n, 2))
    # largest cosine first; ties (conjugate pairs) broken by exponent
    residues.sort(key=lambda e: (-round(cos(pi * e / n), 12), e))
    return RootSet(n, tuple(residues[:m]), sign)
