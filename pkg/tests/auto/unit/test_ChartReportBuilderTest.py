from __future__ import annotations

import unittest

from grassmannian_mirror.algebra.RootSet import RootSet
from grassmannian_mirror.algebra.SchurEvaluator import vandermonde
from grassmannian_mirror.builders.ChartReportBuilder import (
    ChartReportBuilder,
    CriticalPoint,
    chart_report,
    enumerate_critical_points,
    global_potential_check,
    max_modulus_violations,
    normalized_plucker,
    plucker_minor,
    rotation_orbit,
    total_positivity,
    totally_positive_point,
)
from grassmannian_mirror.builders.HolonomyBuilder import holonomy, holonomy_criticality
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape, enumerate_diagrams, rectangle
from grassmannian_mirror.core.errors import RootSetError, UndefinedObjectError

from tests.fixtures.oracles.FloatOracle import float_critical_value


class ChartReportBuilderTest(unittest.TestCase):
    """
    Mirror side at the Karp points [M_I]:
      - Plucker minors vs normalized Schur values
      - chart membership (Gr(2,4) has non-members, prime n has none)
      - global potential, positivity and the max-modulus bound
    """

    def test_point_validation(self) -> None:
        with self.assertRaises(RootSetError):
            CriticalPoint(GridShape(2, 5), RootSet(5, (1, 3), -1))
        with self.assertRaises(RootSetError):
            CriticalPoint(GridShape(2, 5), RootSet(5, (0, 2), 1))

    def test_minor_is_vandermonde_times_schur(self) -> None:
        grid = GridShape(2, 5)
        for point in enumerate_critical_points(grid)[:4]:
            V = vandermonde(point.roots)
            for d in enumerate_diagrams(grid):
                self.assertEqual(plucker_minor(point, d), V * normalized_plucker(point.roots, d))

    def test_gr24_non_member(self) -> None:
        grid = GridShape(2, 4)
        report = chart_report(CriticalPoint(grid, RootSet(4, (1, 5), -1)))
        self.assertFalse(report.member)
        self.assertEqual(report.failing, (rectangle(grid, 1, 1),))
        self.assertTrue(report.critical_value.is_zero())
        self.assertEqual(report.to_json()["failing_rectangles"], ["1x1"])

        members = [r.member for r in ChartReportBuilder(grid).run()]
        self.assertEqual(members.count(False), 2)

    def test_prime_n_all_members(self) -> None:
        for k, n in [(2, 5), (3, 7), (2, 7)]:
            reports = ChartReportBuilder(GridShape(k, n), jobs=2).run()
            self.assertTrue(all(r.member for r in reports))

    def test_critical_values_match_float(self) -> None:
        for point in enumerate_critical_points(GridShape(3, 6)):
            report = chart_report(point)
            z = float_critical_value(point.roots.exponents, 6)
            self.assertAlmostEqual(report.value, z, places=9)

    def test_global_potential(self) -> None:
        for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
            for point in enumerate_critical_points(GridShape(k, n)):
                self.assertTrue(global_potential_check(point).passed, msg=str(point.roots))

    def test_totally_positive_point(self) -> None:
        point = totally_positive_point(GridShape(2, 5))
        self.assertEqual(point.roots.exponents, (0, 2, 8))
        for k, n in [(2, 4), (2, 5), (3, 6), (3, 7)]:
            self.assertTrue(total_positivity(GridShape(k, n)).passed)

    def test_max_modulus_bound_and_orbit(self) -> None:
        grid = GridShape(2, 6)
        reports = ChartReportBuilder(grid).run()
        self.assertEqual(max_modulus_violations(reports, grid), [])
        orbit = rotation_orbit(totally_positive_point(grid))
        self.assertEqual(len({p.roots for p in orbit}), 6)
        top = chart_report(orbit[0]).value
        for p in orbit:
            self.assertAlmostEqual(abs(chart_report(p).value), abs(top), places=9)

    def test_qh_label(self) -> None:
        point = CriticalPoint(GridShape(2, 5), RootSet(5, (0, 2, 8), 1))
        self.assertEqual(point.qh_label.exponents, (1, 9))
        self.assertEqual(chart_report(point).to_json()["qh_exponents"], [1, 9])

    def test_frame(self) -> None:
        df = ChartReportBuilder.to_frame(ChartReportBuilder(GridShape(2, 4)).run())
        self.assertEqual(len(df), 6)
        self.assertEqual(list(df.columns), ["mirror_exponents", "qh_exponents", "member", "failing_rectangles", "re", "im"])


class HolonomyBuilderTest(unittest.TestCase):
    def test_gr12(self) -> None:
        point = CriticalPoint(GridShape(1, 2), RootSet(2, (0,), 1))
        hol = holonomy(point)
        self.assertEqual(len(hol.entries), 1)
        self.assertEqual(hol.entries[0].variable, "x_{1,1}")
        self.assertAlmostEqual(hol.entries[0].value, 1.0)
        self.assertTrue(holonomy_criticality(point).passed)

    def test_non_member_has_no_holonomy(self) -> None:
        point = CriticalPoint(GridShape(2, 4), RootSet(4, (1, 5), -1))
        with self.assertRaises(UndefinedObjectError):
            holonomy(point)

    def test_members_are_critical(self) -> None:
        for k, n in [(2, 4), (2, 5), (3, 6), (3, 7)]:
            for point in enumerate_critical_points(GridShape(k, n)):
                if not chart_report(point).member:
                    continue
                check = holonomy_criticality(point)
                self.assertTrue(check.passed, msg=f"{point.grid} {point.roots}: {check}")

    def test_entry_json(self) -> None:
        point = totally_positive_point(GridShape(2, 5))
        payload = holonomy(point).entries[0].to_json()
        self.assertEqual(set(payload), {"variable", "numerator", "denominator", "re", "im"})
        self.assertAlmostEqual(payload["im"], 0.0)
        self.assertGreater(payload["re"], 0.0)


if __name__ == "__main__":
    unittest.main()
