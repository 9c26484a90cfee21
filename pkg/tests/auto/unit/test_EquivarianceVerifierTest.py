from __future__ import annotations

import unittest

from grassmannian_mirror.algebra.RootSet import RootSet
from grassmannian_mirror.builders.ChartReportBuilder import (
    CriticalPoint,
    chart_report,
    enumerate_critical_points,
    plucker_minor,
)
from grassmannian_mirror.builders.DihedralAction import DihedralElement, all_elements, dihedral_act
from grassmannian_mirror.builders.EquivarianceVerifier import (
    EquivarianceVerifier,
    young_action_pluecker,
    verify_equivariance,
)
from grassmannian_mirror.algebra.CycInt import proportionality_failures
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape, enumerate_diagrams


class DihedralActionTest(unittest.TestCase):
    def test_group_laws(self) -> None:
        n = 6
        elems = all_elements(n)
        self.assertEqual(len(elems), 2 * n)
        self.assertEqual(len(set(elems)), 2 * n)
        e = DihedralElement.identity(n)
        r, s = DihedralElement.r(n), DihedralElement.s(n)
        self.assertEqual(r.power(n), e)
        self.assertEqual(s * s, e)
        self.assertEqual(r * s, s * r.inverse())
        for a in elems:
            self.assertEqual(a * a.inverse(), e)
            for b in elems:
                self.assertIn(a * b, elems)

    def test_labels(self) -> None:
        self.assertEqual([g.label() for g in all_elements(3)], ["e", "r", "r^2", "s", "rs", "r^2s"])
        self.assertEqual(str(DihedralElement(4, -1)), "r^3")

    def test_action_is_a_homomorphism(self) -> None:
        I = RootSet(5, (0, 2, 8), 1)
        J = RootSet(5, (0, 4, 6), 1)
        for a in all_elements(5):
            for b in all_elements(5):
                for X in (I, J):
                    self.assertEqual((a * b).act(X), a.act(b.act(X)))

    def test_mismatched_orders(self) -> None:
        with self.assertRaises(ValueError):
            DihedralElement.r(4) * DihedralElement.r(5)
        with self.assertRaises(ValueError):
            dihedral_act(DihedralElement.s(4), RootSet(5, (0,), 1))


class EquivarianceVerifierTest(unittest.TestCase):
    """Exhaustive D_n checks on small grids, serial and threaded."""

    def test_no_violations(self) -> None:
        for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
            with self.subTest(k=k, n=n):
                report = EquivarianceVerifier(GridShape(k, n), jobs=2).run()
                self.assertTrue(report.passed, msg=report.to_frame().to_string())
                self.assertEqual(report.elements, 2 * n)

    def test_function_form(self) -> None:
        self.assertEqual(verify_equivariance(GridShape(2, 5)), [])

    def test_young_action_on_pluecker_vectors(self) -> None:
        grid = GridShape(2, 5)
        diagrams = enumerate_diagrams(grid)
        I = RootSet(5, (0, 2, 8), 1)
        base = [plucker_minor(I, d) for d in diagrams]
        for g in all_elements(5):
            moved = young_action_pluecker(g, base, diagrams)
            target = [plucker_minor(g.act(I), d) for d in diagrams]
            self.assertEqual(proportionality_failures(moved, target), [], msg=g.label())
        with self.assertRaises(ValueError):
            young_action_pluecker(DihedralElement.s(5), base[:-1], diagrams)

    def test_critical_value_rotates(self) -> None:
        grid = GridShape(2, 5)
        point = enumerate_critical_points(grid)[3]
        value = chart_report(point).critical_value
        for g in all_elements(5):
            moved = chart_report(CriticalPoint(grid, g.act(point.roots))).critical_value
            expected = (value.conj() if g.flip else value).shift(2 * g.t)
            self.assertEqual(moved, expected)


if __name__ == "__main__":
    unittest.main()
