import random
import unittest
import itertools
from fractions import Fraction

from rhb_certifier.calculus.exceptions import InvalidInputError
from rhb_certifier.calculus.strings_fractions import (
    PlumbingString, ZERO, EMPTY, make_s, make_s_prime, make_s_doubleprime, owens_string, parse_string,
    hj_evaluate, hj_expand, riemenschneider_dual, blow_down_once, blows_down_to_zero,
    blows_down_to_zero_exhaustive,
)


def S(*entries):
    return PlumbingString(entries)


class TestConstructors(unittest.TestCase):

    def test_make_s(self):
        self.assertEqual(make_s(-1, 5), S(2, 2, 2))
        self.assertEqual(make_s(0, 1), S(2, 3, 2, 2, 3))
        self.assertEqual(make_s(1, 3), S(2, 2, 2, 5, 2, 2, 5, 2, 2, 2, 2, 5, 2, 2, 5))

    def test_make_s_length(self):
        for k in range(-1, 5):
            for m in range(1, 8):
                self.assertEqual(len(make_s(k, m)), 3 + 2 * (k + 1) * m)

    def test_make_s_prime_and_doubleprime(self):
        self.assertEqual(make_s_prime(-1, 7), S(2, 1, 2))
        self.assertEqual(make_s_prime(0, 1), S(2, 3, 1, 2, 3))
        self.assertEqual(make_s_doubleprime(0, 1), S(1, 3, 2, 1, 3))
        self.assertEqual(make_s_doubleprime(0, 3), S(2, 2, 1, 5, 2, 2, 2, 1, 5))
        # non-positive repeat counts are omitted
        self.assertEqual(make_s_doubleprime(-1, 3), make_s_doubleprime(0, 3))

    def test_owens_string(self):
        self.assertEqual(owens_string(-1), S(4))
        self.assertEqual(owens_string(0), S(3, 5, 2))
        self.assertEqual(owens_string(1), S(3, 3, 5, 3, 2))

    def test_rejects_bad_parameters(self):
        with self.assertRaises(InvalidInputError):
            make_s(-2, 1)
        with self.assertRaises(InvalidInputError):
            make_s(0, 0)
        with self.assertRaises(ValueError):
            make_s_prime(0, -3)


class TestParser(unittest.TestCase):

    def test_parse_repeat_blocks(self):
        self.assertEqual(parse_string("2,(2^2,5)^3,2,2"), S(2, 2, 2, 5, 2, 2, 5, 2, 2, 5, 2, 2))
        self.assertEqual(parse_string("3^2, 5"), S(3, 3, 5))
        self.assertEqual(parse_string("2^0,4"), S(4))
        self.assertEqual(parse_string("-1,0"), S(-1, 0))
        self.assertEqual(parse_string(""), EMPTY)

    def test_parse_matches_constructor(self):
        self.assertEqual(parse_string("2,(2^2,5)^2,2,2,(2^2,5)^2"), make_s(1, 3))

    def test_parse_errors(self):
        for text in ("2,,3", "(2,3", "2^", "2;3", "2,(3)^-1"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidInputError):
                    parse_string(text)


class TestContinuedFractions(unittest.TestCase):

    def test_hj_evaluate(self):
        self.assertEqual(hj_evaluate(S(3, 5, 2)), Fraction(25, 9))
        self.assertEqual(hj_evaluate(S(2, 2, 2)), Fraction(4, 3))
        self.assertEqual(hj_evaluate(S(2, 3, 2, 2, 3)), Fraction(25, 16))
        self.assertEqual(hj_evaluate("3,3,5,3,2"), Fraction(169, 64))

    def test_hj_evaluate_errors(self):
        with self.assertRaises(InvalidInputError):
            hj_evaluate(EMPTY)
        with self.assertRaises(InvalidInputError):
            hj_evaluate(S(2, 1, 2))

    def test_hj_expand(self):
        self.assertEqual(hj_expand(25, 9), S(3, 5, 2))
        self.assertEqual(hj_expand(4, 3), S(2, 2, 2))
        self.assertEqual(hj_expand(2, 1), S(2))
        self.assertEqual(hj_expand(7, 1), S(7))

    def test_hj_expand_errors(self):
        for p, q in ((6, 4), (3, 3), (2, 5), (5, 0)):
            with self.subTest(p=p, q=q):
                with self.assertRaises(InvalidInputError):
                    hj_expand(p, q)

    def test_round_trip_exhaustive(self):
        for p in range(2, 301):
            for q in range(1, p):
                if Fraction(p, q).denominator == q:
                    s = hj_expand(p, q)
                    self.assertTrue(s.is_hj())
                    self.assertEqual(hj_evaluate(s), Fraction(p, q))

    def test_round_trip_sampled(self):
        rng = random.Random(20250302)
        checked = 0
        while checked < 2000:
            p = rng.randint(301, 10 ** 4)
            q = rng.randint(1, p - 1)
            if Fraction(p, q).denominator != q:
                continue
            self.assertEqual(hj_evaluate(hj_expand(p, q)), Fraction(p, q))
            checked += 1


class TestDuality(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(riemenschneider_dual(S(2, 3, 2, 2, 3)), S(3, 5, 2))
        self.assertEqual(riemenschneider_dual(S(2)), S(2))
        self.assertEqual(riemenschneider_dual(make_s(1, 1)), S(3, 3, 5, 3, 2))
        self.assertEqual(riemenschneider_dual(S(2, 2, 2)), S(4))

    def _check(self, s):
        value = hj_evaluate(s)
        p, q = value.numerator, value.denominator
        dual = riemenschneider_dual(s)
        self.assertEqual(hj_evaluate(dual), Fraction(p, p - q))
        self.assertEqual(riemenschneider_dual(dual), s)

    def test_exhaustive_short_strings(self):
        for n in range(1, 7):
            for entries in itertools.product(range(2, 7), repeat=n):
                self._check(PlumbingString(entries))

    def test_sampled_long_strings(self):
        rng = random.Random(12)
        for _ in range(1000):
            n = rng.randint(7, 12)
            self._check(PlumbingString(rng.randint(2, 6) for _ in range(n)))

    def test_rejects_small_entries(self):
        with self.assertRaises(InvalidInputError):
            riemenschneider_dual(S(2, 1))


class TestBlowDown(unittest.TestCase):

    def test_blow_down_once(self):
        self.assertEqual(blow_down_once(S(2, 1, 2), 2), S(1, 1))
        self.assertEqual(blow_down_once(S(1, 1), 1), ZERO)
        self.assertEqual(blow_down_once(S(1, 3, 2, 1, 3), 4), S(1, 3, 1, 2))
        self.assertEqual(blow_down_once(S(4, 1), 2), S(3))
        self.assertEqual(blow_down_once(S(1), 1), EMPTY)

    def test_blow_down_once_errors(self):
        with self.assertRaises(InvalidInputError):
            blow_down_once(S(2, 1, 2), 1)
        with self.assertRaises(InvalidInputError):
            blow_down_once(S(2, 1, 2), 4)

    def test_blows_down_to_zero(self):
        result = blows_down_to_zero(S(2, 1, 2))
        self.assertTrue(result.reduced)
        self.assertEqual(result.moves, (2, 1))
        self.assertEqual(result.path, (S(2, 1, 2), S(1, 1), ZERO))
        self.assertTrue(blows_down_to_zero(S(1, 3, 2, 1, 3)).reduced)
        self.assertFalse(blows_down_to_zero(S(2, 2, 2)).reduced)
        self.assertFalse(blows_down_to_zero(S(1)).reduced)

    def test_family_blows_down(self):
        for k in range(-1, 9):
            for m in range(1, 12, 2):
                with self.subTest(k=k, m=m):
                    for s in (make_s_prime(k, m), make_s_doubleprime(k, m)):
                        result = blows_down_to_zero(s)
                        self.assertTrue(result.reduced)
                        self.assertEqual(len(result.moves), len(s) - 1)
                    self.assertFalse(blows_down_to_zero(make_s(k, m)).reduced)

    def test_leftmost_order_is_complete(self):
        for n in range(1, 9):
            for entries in itertools.product(range(0, 5), repeat=n):
                s = PlumbingString(entries)
                self.assertEqual(blows_down_to_zero(s).reduced, blows_down_to_zero_exhaustive(s), str(s))


if __name__ == '__main__':
    unittest.main()
