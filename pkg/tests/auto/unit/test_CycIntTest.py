from __future__ import annotations

import unittest
from math import gcd

from grassmannian_mirror.algebra.CycInt import CycInt, cyc_sum, proportionality_failures
from grassmannian_mirror.algebra.CyclotomicPolynomial import (
    CycPoly,
    cyclotomic_polynomial,
    divmod_monic,
    euler_phi,
    reduce_mod_monic,
)
from grassmannian_mirror.core.errors import RingMismatchError

from tests.fixtures.oracles.PolynomialDivisionOracle import (
    brute_force_is_zero,
    cyclotomic_from_roots,
)


class CyclotomicPolynomialTest(unittest.TestCase):
    def test_known_polynomials(self) -> None:
        self.assertEqual(cyclotomic_polynomial(1).coeffs, (-1, 1))
        self.assertEqual(cyclotomic_polynomial(4).coeffs, (1, 0, 1))
        self.assertEqual(str(cyclotomic_polynomial(10)), "x^4 - x^3 + x^2 - x + 1")

    def test_matches_numeric_roots(self) -> None:
        for N in range(1, 31):
            with self.subTest(N=N):
                phi = cyclotomic_polynomial(N)
                self.assertEqual(list(phi.coeffs), cyclotomic_from_roots(N))
                self.assertEqual(phi.degree, euler_phi(N))

    def test_product_over_divisors(self) -> None:
        N = 12
        prod = CycPoly((1,))
        for d in range(1, N + 1):
            if N % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        self.assertEqual(prod, CycPoly.x_power_minus_one(N))

    def test_division(self) -> None:
        q, r = divmod_monic(CycPoly.x_power_minus_one(6), cyclotomic_polynomial(6))
        self.assertFalse(any(r))
        self.assertEqual(CycPoly(tuple(q)) * cyclotomic_polynomial(6), CycPoly.x_power_minus_one(6))
        self.assertEqual(reduce_mod_monic([0, 0, 1], CycPoly((1, 0, 1))), [-1, 0])
        with self.assertRaises(ValueError):
            reduce_mod_monic([1], CycPoly((1, 2)))

    def test_euler_phi(self) -> None:
        for n in range(1, 60):
            self.assertEqual(euler_phi(n), sum(1 for a in range(1, n + 1) if gcd(a, n) == 1))


class CycIntTest(unittest.TestCase):
    """
    Exact ring arithmetic in Z[zeta_N]:
      - zero tests modulo Phi_N (agree with brute-force long division)
      - ring axioms on small samples
      - conj / rotate / to_complex consistency
    """

    def test_zero_tests(self) -> None:
        self.assertTrue((CycInt.zeta(10, 5) + CycInt.one(10)).is_zero())
        self.assertTrue(cyc_sum((CycInt.zeta(7, e) for e in range(7)), 7).is_zero())
        self.assertFalse(cyc_sum((CycInt.zeta(7, e) for e in range(6)), 7).is_zero())
        self.assertFalse(CycInt.zeta(12, 3).is_zero())
        # zeta_6 - zeta_6^2 - 1 = 0
        self.assertTrue((CycInt.zeta(6, 1) - CycInt.zeta(6, 2) - 1).is_zero())

    def test_zero_tests_match_long_division(self) -> None:
        samples = [
            (8, (1, 0, 0, 0, 1, 0, 0, 0)),
            (8, (0, 1, 0, 0, 0, 1, 0, 0)),
            (12, (1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0)),
            (12, (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0)),
            (12, (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
            (15, (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0)),
            (15, (2, -1, 0, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1)),
        ]
        for N, coeffs in samples:
            with self.subTest(N=N, coeffs=coeffs):
                a = CycInt(N, coeffs)
                self.assertEqual(a.is_zero(), brute_force_is_zero(coeffs, N))
                self.assertEqual(a.is_zero(), abs(a.to_complex()) < 1e-9)

    def test_equality_and_hash(self) -> None:
        a = CycInt.zeta(10, 5)
        b = CycInt.from_int(10, -1)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertEqual(a, -1)
        self.assertNotEqual(CycInt.one(10), CycInt.one(12))
        self.assertEqual(len({a, b, a.canonical()}), 1)

    def test_ring_mismatch(self) -> None:
        with self.assertRaises(RingMismatchError):
            CycInt.one(8) + CycInt.one(10)
        with self.assertRaises(ValueError):
            CycInt(4, (1, 0))

    def test_ring_axioms(self) -> None:
        N = 10
        a = CycInt(N, (1, 2, 0, -1, 0, 0, 3, 0, 0, 1))
        b = CycInt(N, (0, -1, 4, 0, 0, 2, 0, 0, 1, 0))
        c = CycInt.zeta(N, 3) + 2
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * b, b * a)
        self.assertTrue((a - a).is_zero())
        self.assertEqual(a * 3, a + a + a)
        self.assertEqual(1 - a, -(a - 1))

    def test_conj_rotate_complex(self) -> None:
        N = 14
        a = CycInt(N, tuple(range(N)))
        z = a.to_complex()
        self.assertAlmostEqual(a.conj().to_complex(), z.conjugate(), places=9)
        self.assertAlmostEqual(a.rotate().to_complex(), z * CycInt.zeta(N, 2).to_complex(), places=9)
        self.assertEqual(a.shift(N), a)
        self.assertEqual(a.conj().conj(), a)
        self.assertLess(a.error_bound(), 1e-9)

    def test_json(self) -> None:
        payload = CycInt.zeta(4, 1).to_json()
        self.assertEqual(payload, {"order": 4, "coeffs": ["0", "1", "0", "0"]})

    def test_proportionality(self) -> None:
        N = 8
        w = [CycInt.one(N), CycInt.zeta(N, 1), CycInt.zero(N)]
        u = [x * CycInt.zeta(N, 3) * 2 for x in w]
        self.assertEqual(proportionality_failures(u, w), [])
        u_bad = list(u)
        u_bad[1] = u_bad[1] + 1
        self.assertEqual(proportionality_failures(u_bad, w), [1])
        self.assertEqual(proportionality_failures(u[:2], w), [0, 1, 2])


if __name__ == "__main__":
    unittest.main()
