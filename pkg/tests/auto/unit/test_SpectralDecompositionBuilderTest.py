from __future__ import annotations

import unittest
from math import comb

import numpy as np

from grassmannian_mirror.algebra.RootSet import RootSet, enumerate_rootsets, qh_sign
from grassmannian_mirror.builders.PieriMatrixBuilder import pieri_matrix
from grassmannian_mirror.builders.SpectralDecompositionBuilder import (
    SchurVector,
    SpectralDecompositionBuilder,
    closed_form_eigenvalue,
    spectral_decomposition,
    verify_schur_eigenvector,
)
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape, YoungDiagram
from grassmannian_mirror.core.errors import RootSetError

from tests.fixtures.oracles.FloatOracle import float_eigenvalues, nearest_distance


class PieriMatrixBuilderTest(unittest.TestCase):
    def test_shape_and_columns(self) -> None:
        P = pieri_matrix(GridShape(2, 4))
        self.assertEqual(P.dimension, 6)
        self.assertEqual(P.matrix.shape, (6, 6))
        g = GridShape(2, 4)
        self.assertEqual(P.column(YoungDiagram.full(g)), [YoungDiagram.of(g, 1)])
        # every column of a Pieri matrix is non-empty
        self.assertTrue(all(P.matrix[:, j].sum() >= 1 for j in range(P.dimension)))

    def test_apply_matches_numpy(self) -> None:
        from grassmannian_mirror.algebra.CycInt import CycInt

        P = pieri_matrix(GridShape(2, 5))
        ints = list(range(1, P.dimension + 1))
        vec = [CycInt.from_int(10, v) for v in ints]
        expected = P.matrix.astype(int) @ np.array(ints)
        self.assertEqual(P.apply(vec), [int(x) for x in expected])


class SpectralDecompositionBuilderTest(unittest.TestCase):
    """
    Closed-form spectrum of c_1 against the Pieri matrix:
      1. exact eigenvector identity for every root set
      2. closed-form eigenvalues match numpy eigenvalues of n P
      3. grouping / multiplicities on small grids
    """

    def test_eigenvectors_exact(self) -> None:
        for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
            grid = GridShape(k, n)
            P = pieri_matrix(grid)
            for J in enumerate_rootsets(n, k, qh_sign(k)):
                with self.subTest(grid=str(grid), J=str(J)):
                    self.assertTrue(verify_schur_eigenvector(J, P, scale="vandermonde"))
                    self.assertTrue(verify_schur_eigenvector(J, P, scale="normalized"))

    def test_normalized_vector_starts_with_one(self) -> None:
        P = pieri_matrix(GridShape(2, 5))
        vec = SchurVector.build(P, RootSet(5, (1, 3), -1))
        self.assertEqual(vec.components[0], 1)
        with self.assertRaises(RootSetError):
            SchurVector.build(P, RootSet(5, (0, 2), 1))

    def test_closed_form_matches_numpy(self) -> None:
        for k, n in [(2, 4), (2, 5), (3, 6), (2, 7)]:
            grid = GridShape(k, n)
            numeric = float_eigenvalues(pieri_matrix(grid).matrix, n)
            for J in enumerate_rootsets(n, k, qh_sign(k)):
                z = closed_form_eigenvalue(J, grid).to_complex()
                self.assertLess(nearest_distance(z, numeric), 1e-6)

    def test_gr25_spectrum(self) -> None:
        summary = spectral_decomposition(GridShape(2, 5))
        self.assertEqual(len(summary.groups), 10)
        self.assertEqual(summary.multiplicities(), [1] * 10)
        self.assertAlmostEqual(summary.groups[0].modulus, 8.0901699, places=6)
        self.assertEqual(len(summary.max_modulus_groups()), 5)

    def test_gr24_multiplicities(self) -> None:
        summary = spectral_decomposition(GridShape(2, 4))
        self.assertEqual(summary.multiplicities(), [1, 1, 1, 1, 2])
        origin = summary.groups[-1]
        self.assertTrue(origin.eigenvalue.is_zero())
        self.assertEqual(origin.argument, 0.0)
        self.assertEqual(summary.total_multiplicity, comb(4, 2))

    def test_groups_sorted_by_modulus_then_argument(self) -> None:
        summary = spectral_decomposition(GridShape(3, 6))
        keys = [(-round(g.modulus, 9), round(g.argument, 9)) for g in summary.groups]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(summary.total_multiplicity, comb(6, 3))

    def test_jobs_do_not_change_the_summary(self) -> None:
        grid = GridShape(3, 7)
        serial = SpectralDecompositionBuilder(grid, jobs=1).run().to_json()
        threaded = SpectralDecompositionBuilder(grid, jobs=4).run().to_json()
        self.assertEqual(serial, threaded)

    def test_json_and_frame(self) -> None:
        summary = spectral_decomposition(GridShape(1, 3))
        payload = summary.to_json()
        self.assertEqual(payload["k"], 1)
        self.assertEqual(len(payload["eigenvalues"]), 3)
        self.assertEqual(
            set(payload["eigenvalues"][0]),
            {"re", "im", "modulus", "multiplicity", "max_modulus", "root_sets", "exact"},
        )
        df = summary.to_frame()
        self.assertEqual(len(df), 3)
        self.assertTrue(df["max_modulus"].all())


if __name__ == "__main__":
    unittest.main()
