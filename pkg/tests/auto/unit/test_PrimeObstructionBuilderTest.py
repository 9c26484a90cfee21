from __future__ import annotations

import unittest

from grassmannian_mirror.builders.PrimeObstructionBuilder import (
    is_prime,
    prime_obstruction_report,
    vanishing_subsums,
)


class PrimeObstructionBuilderTest(unittest.TestCase):
    def test_is_prime(self) -> None:
        self.assertEqual([p for p in range(20) if is_prime(p)], [2, 3, 5, 7, 11, 13, 17, 19])

    def test_reports_pass_for_primes(self) -> None:
        for p in (3, 5, 7, 11, 13):
            for k in range(1, p):
                report = prime_obstruction_report(k, p)
                self.assertTrue(report.passed, msg=f"k={k}, p={p}")
                self.assertEqual(len(report.rows), k * (p - k))

    def test_known_count(self) -> None:
        report = prime_obstruction_report(2, 5)
        row = next(r for r in report.rows if (r.height, r.width) == (1, 1))
        self.assertEqual(row.count, 3)
        self.assertEqual(len(report.to_frame()), 6)

    def test_bad_input(self) -> None:
        with self.assertRaises(ValueError):
            prime_obstruction_report(2, 6)
        with self.assertRaises(ValueError):
            prime_obstruction_report(5, 5)
        with self.assertRaises(ValueError):
            vanishing_subsums(9)
        with self.assertRaises(ValueError):
            vanishing_subsums(17)

    def test_vanishing_subsums(self) -> None:
        for p in (2, 3, 5, 7):
            self.assertEqual(vanishing_subsums(p), [(), tuple(range(p))])


if __name__ == "__main__":
    unittest.main()
