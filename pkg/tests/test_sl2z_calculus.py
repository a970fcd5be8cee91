import math
import random
import unittest
import itertools

from rhb_certifier.calculus.exceptions import InvalidInputError
from rhb_certifier.calculus.strings_fractions import PlumbingString, make_s, make_s_prime, make_s_doubleprime
from rhb_certifier.calculus.sl2z_calculus import (
    Vec2, Mat2, LensSpace, S1XS2, matrix_A, partial_product, string_product, meridian_coords,
    lens_from_string, lens_equivalent, lens_of_form_p2_pq_minus_1, cross_check_exhaustive,
)
from rhb_certifier.calculus.obstruction import boundary_pq


def S(*entries):
    return PlumbingString(entries)


class TestMatrices(unittest.TestCase):

    def test_matrix_A(self):
        self.assertEqual(matrix_A(2), Mat2(2, -1, 1, 0))
        self.assertEqual(matrix_A(0) ** 2, Mat2(-1, 0, 0, -1))
        for m in range(-5, 6):
            self.assertEqual(matrix_A(m).det(), 1)

    def test_string_product(self):
        self.assertEqual(string_product(S(2, 2, 2)).first_column(), Vec2(4, 3))
        self.assertEqual(string_product(S(2)), Mat2(2, -1, 1, 0))
        self.assertEqual(string_product(S(2, 3, 2, 2, 3)).first_column(), Vec2(25, 16))
        self.assertEqual(string_product(S()), Mat2.identity())

    def test_determinant_is_one(self):
        rng = random.Random(7)
        for _ in range(300):
            s = PlumbingString(rng.randint(-4, 6) for _ in range(rng.randint(0, 15)))
            self.assertEqual(string_product(s).det(), 1)

    def test_meridian_coords(self):
        self.assertEqual(meridian_coords(S(2, 3, 2, 2, 3), 1), Vec2(-1, 0))
        self.assertEqual(meridian_coords(S(2, 2), 2), Vec2(-2, -1))
        with self.assertRaises(InvalidInputError):
            meridian_coords(S(2, 2), 3)
        with self.assertRaises(InvalidInputError):
            meridian_coords(S(2, 2), 0)
        # the m-th meridian of s_{k,m} sits at +-(m, m - 1)
        for k in range(0, 3):
            for m in range(1, 8, 2):
                with self.subTest(k=k, m=m):
                    self.assertIn(meridian_coords(make_s(k, m), m), (Vec2(m, m - 1), Vec2(-m, 1 - m)))


    def test_partial_product(self):
        s = make_s(1, 3)
        for t in range(len(s)):
            self.assertEqual(partial_product(s, t + 1), partial_product(s, t) @ matrix_A(s[t]))

    def test_third_curve_coordinates(self):
        # A_2^{m-1} has first column (m, m-1)
        for m in range(1, 12):
            self.assertEqual(string_product(PlumbingString((2,) * (m - 1))).first_column(), Vec2(m, m - 1))

    def test_cross_check_exhaustive(self):
        # 4 + 4^2 + ... + 4^10 strings
        self.assertEqual(cross_check_exhaustive(10), sum(4 ** n for n in range(1, 11)))


class TestLensSpaces(unittest.TestCase):

    def test_normal_form(self):
        self.assertEqual(LensSpace(25, 34), LensSpace(25, 9))
        self.assertEqual(LensSpace(-4, -1), LensSpace(4, 1))
        self.assertEqual(LensSpace(0, -1), S1XS2)
        self.assertEqual(LensSpace(1, 7), LensSpace(1, 0))
        self.assertTrue(LensSpace(1, 0).is_s3())
        self.assertEqual(LensSpace(25, 9).to_dict(), {"p": "25", "q": "9"})
        with self.assertRaises(InvalidInputError):
            LensSpace(4, 2)

    def test_lens_from_string(self):
        self.assertEqual(lens_from_string(S(2, 2, 2)), LensSpace(4, 1))
        self.assertEqual(lens_from_string(S(2, 3, 2, 2, 3)), LensSpace(25, 9))
        self.assertEqual(lens_from_string(S(0)), S1XS2)
        with self.assertRaises(InvalidInputError):
            lens_from_string(S())

    def test_lens_equivalent(self):
        self.assertTrue(lens_equivalent(LensSpace(25, 9), LensSpace(25, 14)))
        self.assertTrue(lens_equivalent(LensSpace(4, 1), LensSpace(4, 1)))
        self.assertFalse(lens_equivalent(LensSpace(25, 9), LensSpace(25, 4)))
        self.assertFalse(lens_equivalent(LensSpace(25, 9), LensSpace(16, 9)))

    def test_equivalence_relation(self):
        # full triple loop on small p
        for p in range(2, 41):
            spaces = [LensSpace(p, q) for q in range(1, p) if math.gcd(p, q) == 1]
            for a in spaces:
                self.assertTrue(lens_equivalent(a, a))
                for b in spaces:
                    self.assertEqual(lens_equivalent(a, b), lens_equivalent(b, a))
                    if not lens_equivalent(a, b):
                        continue
                    for c in spaces:
                        if lens_equivalent(b, c):
                            self.assertTrue(lens_equivalent(a, c))

    def test_equivalence_classes(self):
        # the classes are {q, q^-1 mod p}; agreeing with that key gives transitivity
        rng = random.Random(11)
        for p in range(2, 501):
            residues = [q for q in range(1, p) if math.gcd(p, q) == 1]
            key = {q: min(q, pow(q, -1, p)) for q in residues}
            for q in residues:
                a, inverse = LensSpace(p, q), LensSpace(p, pow(q, -1, p))
                self.assertTrue(lens_equivalent(a, a))
                self.assertTrue(lens_equivalent(a, inverse))
                self.assertTrue(lens_equivalent(inverse, a))
                for r in rng.sample(residues, min(8, len(residues))):
                    b = LensSpace(p, r)
                    self.assertEqual(lens_equivalent(a, b), key[q] == key[r], (p, q, r))
                    self.assertEqual(lens_equivalent(b, a), key[q] == key[r], (p, q, r))


    def test_lens_of_form(self):
        self.assertEqual(lens_of_form_p2_pq_minus_1(LensSpace(4, 1)), (2, 1))
        self.assertEqual(lens_of_form_p2_pq_minus_1(LensSpace(25, 9)), (5, 2))
        self.assertIsNone(lens_of_form_p2_pq_minus_1(LensSpace(5, 1)))
        self.assertIsNone(lens_of_form_p2_pq_minus_1(LensSpace(25, 2)))

    def test_lens_of_form_agrees_with_search(self):
        for p in range(2, 31):
            n = p * p
            for r in range(1, n):
                if math.gcd(n, r) != 1:
                    continue
                L = LensSpace(n, r)
                found = [q for q in range(1, p) if math.gcd(p, q) == 1 and lens_equivalent(L, LensSpace(n, p * q - 1))]
                self.assertEqual(lens_of_form_p2_pq_minus_1(L), (p, found[0]) if found else None, (n, r))

    def test_lens_of_form_large(self):
        p, q = 2 ** 89 - 1, 10 ** 6
        self.assertEqual(lens_of_form_p2_pq_minus_1(LensSpace(p * p, p * q - 1)), (p, q))
        self.assertEqual(lens_of_form_p2_pq_minus_1(LensSpace(p * p, p * (p - q) - 1)), (p, q))
        self.assertIsNone(lens_of_form_p2_pq_minus_1(LensSpace(p * p, 2)))


    def test_family_boundaries(self):
        for k in range(-1, 9):
            for m in range(1, 12, 2):
                with self.subTest(k=k, m=m):
                    p, q = boundary_pq(k, m, cross_check=False)
                    self.assertEqual(lens_of_form_p2_pq_minus_1(lens_from_string(make_s(k, m))), (p, min(q, p - q)))
                    self.assertEqual(lens_from_string(make_s_prime(k, m)), S1XS2)
                    self.assertEqual(lens_from_string(make_s_doubleprime(k, m)), S1XS2)


if __name__ == '__main__':
    unittest.main()
