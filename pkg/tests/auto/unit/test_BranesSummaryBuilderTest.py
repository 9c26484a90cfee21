from __future__ import annotations

import unittest

from grassmannian_mirror.builders.BranesSummaryBuilder import BranesSummaryBuilder, branes_summary
from grassmannian_mirror.combinatorics.YoungDiagram import GridShape


class BranesSummaryBuilderTest(unittest.TestCase):
    """Occupancy of quantum eigenvalues by chart members."""

    def test_gr24_origin_unoccupied(self) -> None:
        summary = branes_summary(GridShape(2, 4))
        self.assertEqual([b.group.multiplicity for b in summary.groups], [1, 1, 1, 1, 2])
        origin = summary.groups[-1]
        self.assertFalse(origin.occupied)
        self.assertEqual(origin.witnesses, ())
        self.assertEqual(summary.occupied_count(), 4)
        self.assertTrue(summary.values_match)
        self.assertTrue(summary.orbit_closed)
        self.assertTrue(summary.max_modulus_occupied)

    def test_prime_n_fully_occupied(self) -> None:
        for k, n in [(2, 5), (3, 7)]:
            summary = BranesSummaryBuilder(GridShape(k, n), jobs=2).run()
            self.assertEqual(summary.occupied_count(), len(summary.groups))
            self.assertTrue(all(summary.level_uniform.values()))

    def test_checks_hold_on_composite_n(self) -> None:
        for k, n in [(2, 6), (3, 6), (2, 8)]:
            summary = branes_summary(GridShape(k, n))
            checks = summary.to_json()["checks"]
            self.assertTrue(checks["values_match"], msg=f"Gr({k},{n})")
            self.assertTrue(checks["orbit_closed"], msg=f"Gr({k},{n})")
            self.assertTrue(checks["max_modulus_occupied"], msg=f"Gr({k},{n})")

    def test_json_shape(self) -> None:
        payload = branes_summary(GridShape(2, 4)).to_json()
        self.assertEqual(set(payload), {"k", "n", "eigenvalues", "checks"})
        first = payload["eigenvalues"][0]
        self.assertIn("occupied", first)
        self.assertEqual(len(first["witnesses"]), 1)
        self.assertEqual(len(first["qh_witnesses"]), 1)

    def test_frame(self) -> None:
        df = branes_summary(GridShape(2, 4)).to_frame()
        self.assertEqual(len(df), 5)
        self.assertEqual(int(df["occupied"].sum()), 4)


if __name__ == "__main__":
    unittest.main()
