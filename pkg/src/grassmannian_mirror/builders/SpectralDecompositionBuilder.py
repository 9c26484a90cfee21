from __future__ import annotations

from cmath import phase
from dataclasses import dataclass
from math import comb, log10, pi
from typing import Dict, List, Literal, Optional, Tuple

import pandas as pd

from grassmannian_mirror.algebra.CycInt import CycInt, cyc_sum
from grassmannian_mirror.algebra.RootSet import RootSet, enumerate_rootsets, qh_sign
from grassmannian_mirror.algebra.SchurEvaluator import alternant, schur_value
from grassmannian_mirror.builders.PieriMatrixBuilder import PieriMatrix, pieri_matrix
from grassmannian_mirror.builders.PrimeObstructionBuilder import is_prime
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape
from grassmannian_mirror.core.constants import DEFAULT_TOLERANCE
from grassmannian_mirror.core.errors import RootSetError, VerificationFailure
from grassmannian_mirror.utils.json_output import clean_float
from grassmannian_mirror.utils.parallel_map import parallel_map

VectorScale = Literal["normalized", "vandermonde"]


def check_qh_rootset(grid: GridShape, J: RootSet) -> None:
    if J.n != grid.n or J.size != grid.k or J.sign != qh_sign(grid.k):
        raise RootSetError(
            f"{grid} needs {grid.k} roots of x^{grid.n} = {qh_sign(grid.k):+d}, got {J} "
            f"(size {J.size}, sign {J.sign:+d})"
        )


# ---------------------------------------------------------------------
# Schur-basis vectors
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class SchurVector:
    """
    Components conj(S_d(J)) over enumerate_diagrams ("normalized", component
    at the empty diagram is 1), or conj(alternant(d, J)) = conj(V(J)) times
    that ("vandermonde"), which needs no ring division.
    """

    grid: GridShape
    root_set: RootSet
    components: Tuple[CycInt, ...]
    scale: VectorScale = "normalized"

    def __post_init__(self) -> None:
        if self.scale == "normalized" and self.components[0] != 1:
            raise ValueError("Normalized Schur vector must have component 1 at the empty diagram")

    @classmethod
    def build(cls, matrix: PieriMatrix, J: RootSet, scale: VectorScale = "normalized") -> "SchurVector":
        check_qh_rootset(matrix.grid, J)
        if scale == "normalized":
            comps = tuple(schur_value(d, J).conj() for d in matrix.diagrams)
        else:
            comps = tuple(alternant(d, J).conj() for d in matrix.diagrams)
        return cls(matrix.grid, J, comps, scale)


def closed_form_eigenvalue(J: RootSet, grid: Optional[GridShape] = None) -> CycInt:
    """n times the sum of the roots in J."""
    grid = grid or GridShape(J.size, J.n)
    check_qh_rootset(grid, J)
    return cyc_sum(J.values(), J.order) * J.n


def verify_schur_eigenvector(
    J: RootSet,
    matrix: Optional[PieriMatrix] = None,
    scale: VectorScale = "vandermonde",
) -> bool:
    """P . v == S_1(J) . v componentwise, exactly."""
    grid = GridShape(J.size, J.n)
    if matrix is None:
        matrix = pieri_matrix(grid)
    vec = SchurVector.build(matrix, J, scale)
    s_box = cyc_sum(J.values(), J.order)
    image = matrix.apply(vec.components)
    return all(lhs == s_box * v for lhs, v in zip(image, vec.components))


# ---------------------------------------------------------------------
# Spectral summary
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class SpectralGroup:
    eigenvalue: CycInt
    value: complex
    multiplicity: int
    root_sets: Tuple[RootSet, ...]
    modulus: float
    is_max_modulus: bool

    @property
    def argument(self) -> float:
        """Angle in [0, 2 pi); 0 for the zero eigenvalue."""
        if self.modulus <= DEFAULT_TOLERANCE:
            return 0.0
        a = phase(self.value) % (2 * pi)
        return 0.0 if abs(a - 2 * pi) < DEFAULT_TOLERANCE else a


@dataclass(frozen=True)
class SpectralSummary:
    grid: GridShape
    groups: Tuple[SpectralGroup, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(g.multiplicity for g in self.groups)

    def max_modulus_groups(self) -> List[SpectralGroup]:
        return [g for g in self.groups if g.is_max_modulus]

    def multiplicities(self) -> List[int]:
        return [g.multiplicity for g in self.groups]

    def group_of(self, value: CycInt) -> Optional[SpectralGroup]:
        return next((g for g in self.groups if g.eigenvalue == value), None)

    def to_json(self) -> Dict[str, object]:
        return {
            "k": self.grid.k,
            "n": self.grid.n,
            "eigenvalues": [group_json(g) for g in self.groups],
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "re": clean_float(g.value.real),
                    "im": clean_float(g.value.imag),
                    "modulus": clean_float(g.modulus),
                    "multiplicity": g.multiplicity,
                    "max_modulus": g.is_max_modulus,
                    "root_sets": " ".join(str(list(r.exponents)) for r in g.root_sets),
                }
                for g in self.groups
            ],
            columns=["re", "im", "modulus", "multiplicity", "max_modulus", "root_sets"],
        )


def group_json(g: SpectralGroup) -> Dict[str, object]:
    return {
        "re": clean_float(g.value.real),
        "im": clean_float(g.value.imag),
        "modulus": clean_float(g.modulus),
        "multiplicity": g.multiplicity,
        "max_modulus": g.is_max_modulus,
        "root_sets": [list(r.exponents) for r in g.root_sets],
        "exact": g.eigenvalue.canonical().to_json(),
    }


def group_by_value(
    pairs: List[Tuple[RootSet, CycInt]], tol: float = DEFAULT_TOLERANCE
) -> List[SpectralGroup]:
    """
    Exact grouping, then float moduli; sorted by (-modulus, argument).
    Root sets inside a group keep the input (exponent tuple) order.
    """
    buckets: Dict[CycInt, List[RootSet]] = {}
    for rs, value in pairs:
        buckets.setdefault(value, []).append(rs)

    raw = []
    for value, members in buckets.items():
        canon = value.canonical()
        z = canon.to_complex()
        raw.append((canon, z, members, abs(z)))

    max_mod = max(r[3] for r in raw)
    groups = [
        SpectralGroup(
            eigenvalue=canon,
            value=z,
            multiplicity=len(members),
            root_sets=tuple(sorted(members)),
            modulus=mod,
            is_max_modulus=abs(mod - max_mod) <= tol,
        )
        for canon, z, members, mod in raw
    ]
    return sorted(groups, key=lambda g: _group_sort_key(g, tol))


def _group_sort_key(g: SpectralGroup, tol: float) -> Tuple[float, float, Tuple[int, ...]]:
    digits = max(0, int(round(-log10(tol))))
    return (-round(g.modulus, digits), round(g.argument, digits), g.root_sets[0].exponents)


class SpectralDecompositionBuilder:
    """
    Closed-form spectrum of c_1 on QH(Gr(k,n)) at q = 1, grouped exactly.

    - jobs > 1: eigenvalues and eigenvector checks run in a thread pool;
      the merge is sorted so the summary never depends on `jobs`.
    - verify_vectors: also run the exact eigenvector identity per root set
      (skipped above max_eigen_dimension).
    """

    def __init__(
        self,
        grid: GridShape,
        jobs: int = 1,
        tol: float = DEFAULT_TOLERANCE,
        verify_vectors: bool = False,
        max_eigen_dimension: int = 300,
    ) -> None:
        self.grid = grid
        self.jobs = jobs
        self.tol = tol
        self.verify_vectors = verify_vectors
        self.max_eigen_dimension = max_eigen_dimension

    def root_sets(self) -> List[RootSet]:
        return enumerate_rootsets(self.grid.n, self.grid.k, qh_sign(self.grid.k))

    def eigenvector_failures(self, matrix: Optional[PieriMatrix] = None) -> List[RootSet]:
        matrix = matrix or pieri_matrix(self.grid)
        sets = self.root_sets()
        ok = parallel_map(
            lambda J: verify_schur_eigenvector(J, matrix),
            sets,
            jobs=self.jobs,
            desc=f"eigenvectors {self.grid}",
        )
        return [J for J, passed in zip(sets, ok) if not passed]

    def run(self) -> SpectralSummary:
        sets = self.root_sets()
        values = parallel_map(
            lambda J: closed_form_eigenvalue(J, self.grid),
            sets,
            jobs=self.jobs,
            desc=f"eigenvalues {self.grid}",
        )
        summary = SpectralSummary(self.grid, tuple(group_by_value(list(zip(sets, values)), self.tol)))
        self._check_structure(summary)

        if self.verify_vectors and comb(self.grid.n, self.grid.k) <= self.max_eigen_dimension:
            failures = self.eigenvector_failures()
            if failures:
                raise VerificationFailure("schur_eigenvector", str(failures[0]))

        return summary

    def _check_structure(self, summary: SpectralSummary) -> None:
        if summary.total_multiplicity != comb(self.grid.n, self.grid.k):
            raise VerificationFailure("multiplicity_total", str(self.grid))
        top = summary.max_modulus_groups()
        if len(top) != self.grid.n or any(g.multiplicity != 1 for g in top):
            raise VerificationFailure(
                "max_modulus_groups",
                f"{self.grid}: {len(top)} groups, multiplicities {[g.multiplicity for g in top]}",
            )
        if is_prime(self.grid.n) and any(m != 1 for m in summary.multiplicities()):
            raise VerificationFailure("prime_multiplicity_one", str(self.grid))


def spectral_decomposition(grid: GridShape, jobs: int = 1, tol: float = DEFAULT_TOLERANCE) -> SpectralSummary:
    return SpectralDecompositionBuilder(grid, jobs=jobs, tol=tol).run()
