from __future__ import annotations

import time
import unittest
from itertools import permutations
from unittest import mock

import numpy as np

from grassmannian_mirror.algebra.CycInt import CycInt
from grassmannian_mirror.algebra.ExactDeterminant import determinant, monomial_determinant
from grassmannian_mirror.algebra.RootSet import (
    RootSet,
    closest_to_one,
    complement_labeling,
    enumerate_rootsets,
    mirror_sign,
    qh_sign,
)
from grassmannian_mirror.algebra.SchurEvaluator import (
    alternant,
    count_ssyt,
    elementary_symmetric_values,
    hook_content_count,
    poincare_dual_constant,
    poincare_dual_failures,
    schur_jacobi_trudi,
    schur_ssyt,
    schur_value,
    vandermonde,
)
from grassmannian_mirror.algebra import SchurEvaluator
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape, YoungDiagram, enumerate_diagrams, transpose
from grassmannian_mirror.core.errors import DiagramError, RootSetError

from tests.fixtures.oracles.FloatOracle import float_schur_bialternant
from tests.fixtures.oracles.TableauCountOracle import brute_force_ssyt_count


class RootSetTest(unittest.TestCase):
    def test_validation(self) -> None:
        with self.assertRaises(RootSetError):
            RootSet(4, (1, 2), -1)
        with self.assertRaises(RootSetError):
            RootSet(4, (1, 9), -1)
        with self.assertRaises(RootSetError):
            RootSet(4, (0,), 2)
        self.assertEqual(RootSet(4, (9, 3), -1).exponents, (1, 3))

    def test_signs(self) -> None:
        self.assertEqual(qh_sign(1), 1)
        self.assertEqual(qh_sign(2), -1)
        self.assertEqual(mirror_sign(2, 5), 1)
        self.assertEqual(mirror_sign(2, 4), -1)

    def test_enumeration_and_complement(self) -> None:
        sets = enumerate_rootsets(5, 2, -1)
        self.assertEqual(len(sets), 10)
        self.assertEqual(sets, sorted(sets))
        I = RootSet(5, (0, 2, 8), 1)
        self.assertEqual(I.complement().exponents, (4, 6))
        self.assertEqual(I.complement().complement(), I)

    def test_complement_labeling(self) -> None:
        # mirror side of Gr(2,5) has 3 roots of x^5 = 1; quantum side 2 roots of x^5 = -1
        I = RootSet(5, (0, 2, 8), mirror_sign(2, 5))
        J = complement_labeling(I)
        self.assertEqual(J.size, 2)
        self.assertEqual(J.sign, qh_sign(2))
        self.assertEqual(J.exponents, (1, 9))

    def test_rotate_and_conj(self) -> None:
        I = RootSet(5, (0, 2, 8), 1)
        self.assertEqual(I.rotate(5), I)
        self.assertEqual(I.conj(), I)
        self.assertEqual(I.rotate().exponents, (0, 2, 4))

    def test_closest_to_one(self) -> None:
        self.assertEqual(closest_to_one(5, 3, 1).exponents, (0, 2, 8))
        self.assertEqual(closest_to_one(5, 2, -1).exponents, (1, 9))
        self.assertEqual(closest_to_one(4, 2, 1).exponents[0], 0)


class ExactDeterminantTest(unittest.TestCase):
    def test_integer_matrices_match_numpy(self) -> None:
        rng = np.random.default_rng(7)
        for m in range(0, 6):
            ints = rng.integers(-3, 4, size=(m, m))
            mat = [[CycInt.from_int(6, int(x)) for x in row] for row in ints]
            expected = int(round(np.linalg.det(ints))) if m else 1
            self.assertEqual(determinant(mat, 6), expected)

    def test_monomial_determinant_is_vandermonde(self) -> None:
        I = RootSet(5, (1, 3, 7), -1)
        rows = [[r * e for e in I.exponents] for r in range(3)]
        self.assertEqual(monomial_determinant(rows, I.order), vandermonde(I))

    def test_leibniz(self) -> None:
        N = 8
        mat = [[CycInt.zeta(N, i * j + i) + j for j in range(3)] for i in range(3)]
        total = CycInt.zero(N)
        for perm in permutations(range(3)):
            sign = 1
            for a in range(3):
                for b in range(a + 1, 3):
                    if perm[a] > perm[b]:
                        sign = -sign
            term = CycInt.from_int(N, sign)
            for i in range(3):
                term = term * mat[i][perm[i]]
            total = total + term
        self.assertEqual(determinant(mat, N), total)

    def test_sparse_integer_matrices_match_numpy(self) -> None:
        rng = np.random.default_rng(11)
        for m in (7, 9, 11):
            ints = rng.integers(-2, 3, size=(m, m)) * (rng.random((m, m)) < 0.35)
            mat = [[CycInt.from_int(4, int(x)) for x in row] for row in ints]
            self.assertEqual(determinant(mat, 4), int(round(np.linalg.det(ints))))

    def test_wide_one_row_jacobi_trudi(self) -> None:
        # dual Jacobi-Trudi of a single row of width 60 is a banded 60 x 60 determinant
        I = RootSet(7, (3,), -1)
        started = time.perf_counter()
        self.assertEqual(schur_jacobi_trudi((60,), I), CycInt.zeta(14, 180))
        self.assertLess(time.perf_counter() - started, 5.0)

    def test_non_square(self) -> None:
        with self.assertRaises(ValueError):
            determinant([[CycInt.one(4), CycInt.one(4)]], 4)


class SchurEvaluatorTest(unittest.TestCase):
    """
    The three Schur routes agree exactly, and agree with a float
    bialternant computed by numpy.
    """

    def test_three_routes_agree(self) -> None:
        for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
            grid = GridShape(k, n)
            for J in enumerate_rootsets(n, k, qh_sign(k))[:6]:
                V = vandermonde(J)
                for d in enumerate_diagrams(grid):
                    with self.subTest(grid=str(grid), J=str(J), d=str(d)):
                        s = schur_jacobi_trudi(d, J)
                        self.assertEqual(s, schur_ssyt(d, J))
                        self.assertEqual(alternant(d, J), s * V)
                        z = float_schur_bialternant(d.rows, J.floats())
                        self.assertAlmostEqual(s.to_complex(), z, places=8)

    def test_elementary_symmetric(self) -> None:
        J = RootSet(4, (1, 3, 5, 7), -1)
        e = elementary_symmetric_values(J)
        # prod (1 + z t) over the roots of x^4 = -1 is 1 + t^4
        self.assertEqual([x == 0 for x in e], [False, True, True, True, False])
        self.assertEqual(e[4], 1)

    def test_trivial_shapes(self) -> None:
        J = RootSet(5, (1, 9), -1)
        self.assertEqual(schur_value((), J), 1)
        self.assertEqual(schur_value((1,), J), CycInt.zeta(10, 1) + CycInt.zeta(10, 9))
        with self.assertRaises(DiagramError):
            schur_value((1, 1, 1), J)

    def test_counts(self) -> None:
        for shape, m in [((1,), 3), ((2, 1), 3), ((2, 2), 3), ((3, 1), 2), ((2, 1, 1), 4)]:
            with self.subTest(shape=shape, m=m):
                brute = brute_force_ssyt_count(shape, m)
                self.assertEqual(count_ssyt(shape, m), brute)
                self.assertEqual(hook_content_count(shape, m), brute)
        self.assertEqual(hook_content_count((2, 1), 3), 8)

    def test_transposed_labeling(self) -> None:
        """S_{d^T}(I) == S_d(J) for J = -I^c."""
        grid = GridShape(2, 5)
        for I in enumerate_rootsets(5, 3, mirror_sign(2, 5)):
            J = complement_labeling(I)
            for d in enumerate_diagrams(grid):
                self.assertEqual(schur_value(transpose(d), I), schur_value(d, J))

    def test_poincare_dual_relation(self) -> None:
        for k, n in [(2, 4), (2, 5), (3, 6)]:
            grid = GridShape(k, n)
            for J in enumerate_rootsets(n, k, qh_sign(k)):
                self.assertEqual(poincare_dual_failures(J, grid), [])
        with self.assertRaises(RootSetError):
            poincare_dual_failures(RootSet(5, (1,), -1), GridShape(2, 5))

    def test_poincare_dual_constant_closed_form(self) -> None:
        for k, n in [(1, 3), (2, 5), (3, 6), (3, 7)]:
            grid = GridShape(k, n)
            full = YoungDiagram.full(grid)
            for J in enumerate_rootsets(n, k, qh_sign(k)):
                self.assertEqual(poincare_dual_constant(J, grid), schur_value(full, J))
        J = RootSet(5, (1, 3), -1)
        self.assertEqual(poincare_dual_constant(J, GridShape(2, 5)), CycInt.zeta(10, 12))

    def test_poincare_dual_detects_wrong_full_value(self) -> None:
        grid = GridShape(2, 5)
        full = YoungDiagram.full(grid)
        J = enumerate_rootsets(5, 2, qh_sign(2))[0]
        real = SchurEvaluator.schur_value

        def tampered(lam, I):
            value = real(lam, I)
            return value.shift(1) if tuple(lam.rows) == full.rows else value

        with mock.patch.object(SchurEvaluator, "schur_value", side_effect=tampered):
            failures = poincare_dual_failures(J, grid)
        self.assertEqual(failures, [YoungDiagram.empty(grid), full])


if __name__ == "__main__":
    unittest.main()
