from __future__ import annotations

from dataclasses import dataclass
from typing import List

from grassmannian_mirror.algebra.RootSet import RootSet


@dataclass(frozen=True, order=True)
class DihedralElement:
    """
    r^t s^flip in D_n = <r, s | r^n = s^2 = 1, rs = sr^-1>.

    On root sets r multiplies by exp(2 pi i / n) and s conjugates, so
    r^t s acts as I -> exp(2 pi i t / n) conj(I).
    """

    n: int
    t: int = 0
    flip: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Dihedral group order needs n >= 1, got {self.n!r}")
        object.__setattr__(self, "t", int(self.t) % self.n)
        object.__setattr__(self, "flip", bool(self.flip))

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n)

    @classmethod
    def r(cls, n: int, t: int = 1) -> "DihedralElement":
        return cls(n, t)

    @classmethod
    def s(cls, n: int) -> "DihedralElement":
        return cls(n, 0, True)

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """self * other: apply `other` first."""
        if other.n != self.n:
            raise ValueError(f"Cannot compose elements of D_{self.n} and D_{other.n}")
        step = -other.t if self.flip else other.t
        return DihedralElement(self.n, self.t + step, self.flip != other.flip)

    __mul__ = compose

    def inverse(self) -> "DihedralElement":
        if self.flip:
            return self
        return DihedralElement(self.n, -self.t)

    def power(self, e: int) -> "DihedralElement":
        out = DihedralElement.identity(self.n)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = out * base
        return out

    def act(self, I: RootSet) -> RootSet:
        return dihedral_act(self, I)

    def label(self) -> str:
        if self.t == 0 and not self.flip:
            return "e"
        rot = "" if self.t == 0 else ("r" if self.t == 1 else f"r^{self.t}")
        return rot + ("s" if self.flip else "")

    def __str__(self) -> str:
        return self.label()


def all_elements(n: int) -> List[DihedralElement]:
    """The 2n elements: rotations first, then reflections."""
    return [DihedralElement(n, t, flip) for flip in (False, True) for t in range(n)]


def dihedral_act(g: DihedralElement, I: RootSet) -> RootSet:
    if g.n != I.n:
        raise ValueError(f"D_{g.n} does not act on roots of x^{I.n} = {I.sign:+d}")
    out = I.conj() if g.flip else I
    return out.rotate(g.t)
