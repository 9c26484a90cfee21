from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Dict, List, Literal, Mapping, Optional, Tuple

import numpy as np
import pandas as pd

from grassmannian_mirror.algebra.RootSet import (
    RootSet,
    complement_labeling,
    enumerate_rootsets,
    mirror_sign,
    qh_sign,
)
from grassmannian_mirror.algebra.SchurEvaluator import (
    alternant,
    count_ssyt,
    hook_content_count,
    schur_jacobi_trudi,
    schur_ssyt,
    schur_value,
    vandermonde,
)
from grassmannian_mirror.builders.BranesSummaryBuilder import BranesSummaryBuilder
from grassmannian_mirror.builders.ChartReportBuilder import (
    ChartReportBuilder,
    enumerate_critical_points,
    global_potential_check,
    max_modulus_violations,
    plucker_minor,
    total_positivity,
)
from grassmannian_mirror.builders.EquivarianceVerifier import EquivarianceVerifier
from grassmannian_mirror.builders.GelfandCetlinBuilder import (
    codim1_faces,
    disk_potential,
    expected_face_count,
    face_potential,
    verify_pullback,
    verify_self_duality,
)
from grassmannian_mirror.builders.HolonomyBuilder import holonomy_criticality
from grassmannian_mirror.builders.PrimeObstructionBuilder import (
    is_prime,
    prime_obstruction_report,
    vanishing_subsums,
)
from grassmannian_mirror.builders.SpectralDecompositionBuilder import (
    SpectralDecompositionBuilder,
    verify_schur_eigenvector,
)
from grassmannian_mirror.builders.PieriMatrixBuilder import pieri_matrix
from grassmannian_mirror.combinatorics.YoungDiagram import (
    GridShape,
    enumerate_diagrams,
    transpose,
)
from grassmannian_mirror.core import constants
from grassmannian_mirror.core.errors import VerificationFailure
from grassmannian_mirror.utils.parallel_map import parallel_map

Status = Literal["pass", "fail", "skipped", "info"]

# hook-content vs tableau counts: rectangles with m <= 4 in grids up to 4 x 4
HOOK_CONTENT_MAX = 4


@dataclass(frozen=True)
class CheckResult:
    check: str
    status: Status
    witness: Optional[str] = None
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerifyReport:
    grid: GridShape
    mode: str
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.grid.k,
            "n": self.grid.n,
            "mode": self.mode,
            "passed": self.passed,
            "checks": [r.to_json() for r in self.results],
        }

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [r.to_json() for r in self.results],
            columns=["check", "status", "witness", "detail"],
        )


def _first_failure(name: str, items: List[Any], ok: List[bool], detail: str = "") -> CheckResult:
    bad = [str(x) for x, passed in zip(items, ok) if not passed]
    if bad:
        return CheckResult(name, "fail", bad[0], f"{len(bad)} of {len(items)} failed")
    return CheckResult(name, "pass", None, detail or f"{len(items)} cases")


class InvariantSuiteBuilder:
    """
    Runs every exact identity of the package for one grid and collects the
    outcome per check. Nothing raises on a failed identity; the report does.

    Sweep bounds come from PipelineConfig.verification_params, so dev mode
    skips the largest exhaustive sweeps.
    """

    def __init__(
        self,
        grid: GridShape,
        verification: Mapping[str, Any],
        jobs: int = 1,
        tol: float = constants.DEFAULT_TOLERANCE,
        mode: str = "deep",
    ) -> None:
        self.grid = grid
        self.params = dict(verification)
        self.jobs = jobs
        self.tol = tol
        self.mode = mode

    # ---------------- helpers ----------------
    def _bound(self, key: str, default: int) -> int:
        return int(self.params.get(key, default))

    def _sweep(self, func: Callable[[Any], bool], items: List[Any], desc: str) -> List[bool]:
        return parallel_map(func, items, jobs=self.jobs, desc=f"{desc} {self.grid}")

    # ---------------- quantum side ----------------
    def check_spectrum(self) -> CheckResult:
        builder = SpectralDecompositionBuilder(self.grid, jobs=self.jobs, tol=self.tol)
        try:
            summary = builder.run()
        except VerificationFailure as exc:
            return CheckResult("spectrum_structure", "fail", exc.witness, exc.check)
        return CheckResult(
            "spectrum_structure", "pass", None,
            f"{len(summary.groups)} distinct eigenvalues, total multiplicity {summary.total_multiplicity}",
        )

    def check_eigenvectors(self) -> List[CheckResult]:
        g = self.grid
        dim = comb(g.n, g.k)
        if dim > self._bound("max_eigen_dimension", constants.MAX_EIGEN_DIMENSION):
            return [CheckResult("schur_eigenvector", "skipped", None, f"dimension {dim} above sweep bound")]
        matrix = pieri_matrix(g)
        sets = enumerate_rootsets(g.n, g.k, qh_sign(g.k))
        out = [_first_failure(
            "schur_eigenvector",
            sets,
            self._sweep(lambda J: verify_schur_eigenvector(J, matrix), sets, "eigenvectors"),
        )]
        if g.cells <= self._bound("max_exhaustive_cells", constants.MAX_EXHAUSTIVE_CELLS):
            out.append(_first_failure(
                "schur_eigenvector_normalized",
                sets,
                self._sweep(lambda J: verify_schur_eigenvector(J, matrix, "normalized"), sets, "normalized"),
            ))
        return out

    # ---------------- symmetric functions ----------------
    def check_schur_routes(self) -> List[CheckResult]:
        g = self.grid
        out: List[CheckResult] = []
        if g.cells <= self._bound("max_exhaustive_cells", constants.MAX_EXHAUSTIVE_CELLS):
            sets = enumerate_rootsets(g.n, g.k, qh_sign(g.k))
            diagrams = enumerate_diagrams(g)

            def three_routes(J: RootSet) -> bool:
                V = vandermonde(J)
                for d in diagrams:
                    s = schur_ssyt(d, J)
                    if schur_jacobi_trudi(d, J) != s or alternant(d, J) != V * s:
                        return False
                return True

            out.append(_first_failure("schur_three_routes", sets, self._sweep(three_routes, sets, "schur")))

            mirror = enumerate_rootsets(g.n, g.cols, mirror_sign(g.k, g.n))

            def complement(I: RootSet) -> bool:
                J = complement_labeling(I)
                return all(schur_value(transpose(d), I) == schur_value(d, J) for d in diagrams)

            def minors(I: RootSet) -> bool:
                V = vandermonde(I)
                return all(plucker_minor(I, d) == V * schur_value(transpose(d), I) for d in diagrams)

            out.append(_first_failure("complement_labeling", mirror, self._sweep(complement, mirror, "complement")))
            out.append(_first_failure("pluecker_minor_ratio", mirror, self._sweep(minors, mirror, "minors")))
        else:
            out.append(CheckResult("schur_three_routes", "skipped", None, "grid above exhaustive bound"))

        out.append(self.check_random_schur())
        out.append(self.check_hook_content())
        return out

    def check_random_schur(self) -> CheckResult:
        cases = self._bound("random_cases", constants.RANDOM_SCHUR_CASES)
        # the bialternant route is a dense 2^k expansion, so random grids stay within the exhaustive bound
        max_cells = min(
            self._bound("max_random_cells", constants.MAX_RANDOM_CELLS),
            self._bound("max_exhaustive_cells", constants.MAX_EXHAUSTIVE_CELLS),
        )
        rng = np.random.default_rng(self._bound("random_seed", constants.RANDOM_SEED))
        grids = [
            GridShape(k, n)
            for n in range(2, max_cells + 2)
            for k in range(1, n)
            if k * (n - k) <= max_cells
        ]
        witnesses = []
        for _ in range(cases):
            grid = grids[int(rng.integers(len(grids)))]
            diagrams = enumerate_diagrams(grid)
            d = diagrams[int(rng.integers(len(diagrams)))]
            parity = 0 if qh_sign(grid.k) == 1 else 1
            picks = rng.choice(grid.n, size=grid.k, replace=False)
            J = RootSet(grid.n, tuple(2 * int(e) + parity for e in picks), qh_sign(grid.k))
            if alternant(d, J) != vandermonde(J) * schur_jacobi_trudi(d, J):
                witnesses.append(f"{grid} {d} {J}")
        if witnesses:
            return CheckResult("schur_random", "fail", witnesses[0], f"{len(witnesses)} of {cases} failed")
        return CheckResult("schur_random", "pass", None, f"{cases} random cases")

    def check_hook_content(self) -> CheckResult:
        for m in range(1, HOOK_CONTENT_MAX + 1):
            for height in range(1, m + 1):
                for width in range(1, HOOK_CONTENT_MAX + 1):
                    shape = (width,) * height
                    if hook_content_count(shape, m) != count_ssyt(shape, m):
                        return CheckResult("hook_content", "fail", f"{height}x{width}, m={m}")
        return CheckResult("hook_content", "pass", None, f"rectangles up to {HOOK_CONTENT_MAX}x{HOOK_CONTENT_MAX}")

    # ---------------- Gelfand-Cetlin ----------------
    def check_potentials(self) -> List[CheckResult]:
        g = self.grid
        faces = codim1_faces(g)
        out = [
            CheckResult(
                "face_count",
                "pass" if len(faces) == expected_face_count(g) else "fail",
                None if len(faces) == expected_face_count(g) else str(len(faces)),
                f"{len(faces)} faces",
            ),
            CheckResult(
                "face_normals",
                "pass" if all(f.is_primitive for f in faces) and face_potential(g).equals(disk_potential(g)) else "fail",
            ),
            CheckResult("self_duality", "pass" if verify_self_duality(g) else "fail"),
        ]
        if g.cells <= self._bound("max_pullback_cells", constants.MAX_PULLBACK_CELLS):
            out.append(CheckResult("pullback", "pass" if verify_pullback(g) else "fail"))
        else:
            out.append(CheckResult("pullback", "skipped", None, "grid above pullback bound"))
        return out

    # ---------------- mirror side ----------------
    def check_mirror(self) -> List[CheckResult]:
        g = self.grid
        out: List[CheckResult] = []
        points = enumerate_critical_points(g)

        reports = ChartReportBuilder(g, jobs=self.jobs).run()
        if is_prime(g.n):
            out.append(_first_failure("prime_all_members", points, [r.member for r in reports]))

        checks = parallel_map(global_potential_check, points, jobs=self.jobs, desc=f"potential {g}")
        out.append(_first_failure("global_potential", points, [c.passed for c in checks]))

        positivity = total_positivity(g, self.tol)
        out.append(CheckResult(
            "total_positivity",
            "pass" if positivity.passed else "fail",
            None if positivity.passed else str((positivity.non_real + positivity.non_positive)[0]),
        ))

        too_big = max_modulus_violations(reports, g, self.tol)
        out.append(CheckResult(
            "max_modulus_bound",
            "fail" if too_big else "pass",
            str(too_big[0].roots) if too_big else None,
        ))

        members = [r.point for r in reports if r.member]
        crit = parallel_map(lambda p: holonomy_criticality(p, self.tol), members, jobs=self.jobs, desc=f"holonomy {g}")
        out.append(_first_failure("holonomy_criticality", members, [c.passed for c in crit]))

        eq = EquivarianceVerifier(g, jobs=self.jobs).run()
        by_check: Dict[str, List[str]] = {}
        for v in eq.violations:
            by_check.setdefault(v.check, []).append(f"{v.root_set} g={v.element}")
        out.append(CheckResult(
            "equivariance",
            "fail" if eq.violations else "pass",
            eq.violations[0].check + ": " + by_check[eq.violations[0].check][0] if eq.violations else None,
            f"{eq.root_sets} root sets x {eq.elements} group elements",
        ))

        spectrum = SpectralDecompositionBuilder(g, jobs=self.jobs, tol=self.tol)
        try:
            summary = spectrum.run()
        except VerificationFailure:
            return out  # already reported by check_spectrum
        branes = BranesSummaryBuilder(g, jobs=self.jobs, tol=self.tol).join(summary, reports)
        out.append(CheckResult("value_multiset", "pass" if branes.values_match else "fail"))
        out.append(CheckResult("occupancy_orbit_closed", "pass" if branes.orbit_closed else "fail"))
        out.append(CheckResult("max_modulus_occupied", "pass" if branes.max_modulus_occupied else "fail"))
        mixed = [lvl for lvl, ok in branes.level_uniform.items() if not ok]
        out.append(CheckResult(
            "modulus_level_uniform",
            "info",
            str(mixed[0]) if mixed else None,
            "mixed levels present" if mixed else "every level all-filled or all-hollow",
        ))
        return out

    # ---------------- primes ----------------
    def check_primes(self) -> List[CheckResult]:
        g = self.grid
        if not is_prime(g.n):
            return [CheckResult("prime_obstruction", "skipped", None, f"n={g.n} is not prime")]
        report = prime_obstruction_report(g.k, g.n)
        bad = report.failures()
        out = [CheckResult(
            "prime_obstruction",
            "fail" if bad else "pass",
            f"{bad[0].height}x{bad[0].width}" if bad else None,
            f"{len(report.rows)} rectangles",
        )]
        if g.n <= constants.MAX_VANISHING_SUBSUM_PRIME:
            sums = vanishing_subsums(g.n)
            ok = sums == [(), tuple(range(g.n))]
            out.append(CheckResult("vanishing_subsums", "pass" if ok else "fail", None if ok else str(sums[1])))
        return out

    def run(self) -> VerifyReport:
        results: List[CheckResult] = [self.check_spectrum()]
        results += self.check_eigenvectors()
        results += self.check_schur_routes()
        results += self.check_potentials()
        results += self.check_mirror()
        results += self.check_primes()
        return VerifyReport(self.grid, self.mode, tuple(results))
