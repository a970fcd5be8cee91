import unittest
from fractions import Fraction

from rhb_certifier.calculus.exceptions import InvalidInputError
from rhb_certifier.calculus.strings_fractions import owens_string, hj_evaluate
from rhb_certifier.calculus.polyseq import seq_T, eval_at
from rhb_certifier.calculus.obstruction import (
    MarkovTriple, MarkovMembership, boundary_pq, divides_q2_plus_9, q2_plus_9_identity_check, markov_tree,
    markov_numbers, is_markov_number, markov_q_candidates, odd_fibonacci, verify_fibonacci_case,
    symplectic_verdict,
)


class TestBoundary(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(boundary_pq(0, 1), (5, 2))
        self.assertEqual(boundary_pq(0, 3), (17, 4))
        self.assertEqual(boundary_pq(1, 1), (13, 5))
        self.assertEqual(boundary_pq(-1, 7), (2, 1))

    def test_cross_checks_on_grid(self):
        for k in range(0, 9):
            for m in range(1, 12, 2):
                with self.subTest(k=k, m=m):
                    self.assertEqual(boundary_pq(k, m), boundary_pq(k, m, cross_check=False))

    def test_monotone_growth(self):
        for k in range(0, 8):
            for m in range(1, 12, 2):
                p = boundary_pq(k, m, cross_check=False)[0]
                self.assertLess(p, boundary_pq(k + 1, m, cross_check=False)[0])
                self.assertLess(p, boundary_pq(k, m + 2, cross_check=False)[0])

    def test_preconditions(self):
        with self.assertRaises(InvalidInputError):
            boundary_pq(-2, 1)
        with self.assertRaises(InvalidInputError):
            boundary_pq(0, 0)


class TestQ2Plus9(unittest.TestCase):

    def test_divides(self):
        self.assertTrue(divides_q2_plus_9(2, 1))
        self.assertFalse(divides_q2_plus_9(5, 2))
        self.assertFalse(divides_q2_plus_9(17, 4))
        self.assertTrue(divides_q2_plus_9(5, 4))
        with self.assertRaises(InvalidInputError):
            divides_q2_plus_9(0, 1)

    def test_identity(self):
        self.assertTrue(q2_plus_9_identity_check(0, 1))
        self.assertTrue(q2_plus_9_identity_check(1, 3))
        for k in range(0, 26):
            self.assertTrue(q2_plus_9_identity_check(k, 1))

    def test_obstruction_on_grid(self):
        for k in range(0, 11):
            for m in range(3, 16, 2):
                with self.subTest(k=k, m=m):
                    p, q = boundary_pq(k, m, cross_check=False)
                    self.assertFalse(divides_q2_plus_9(p, q))
                    self.assertEqual(q * q + 9 - 8, p * eval_at(seq_T(2 * k + 1), m))
                    self.assertGreaterEqual(p, m ** (2 * k + 2))
        # beyond 64 bits
        self.assertGreater(boundary_pq(10, 15, cross_check=False)[0], 2 ** 64)


class TestMarkov(unittest.TestCase):

    def test_triple(self):
        self.assertEqual(MarkovTriple(5, 1, 2).as_tuple(), (1, 2, 5))
        self.assertEqual(MarkovTriple(1, 2, 5).mutate(1), MarkovTriple(2, 5, 29))
        with self.assertRaises(InvalidInputError):
            MarkovTriple(1, 2, 3)

    def test_tree(self):
        self.assertEqual(markov_tree(0), frozenset({MarkovTriple(1, 1, 1)}))
        self.assertIn(MarkovTriple(1, 2, 5), markov_tree(2))
        self.assertIn(MarkovTriple(2, 5, 29), markov_tree(3))
        self.assertIn(MarkovTriple(1, 5, 13), markov_tree(3))
        self.assertNotIn(MarkovTriple(2, 5, 29), markov_tree(2))

    def test_tree_to_depth_12(self):
        tree = markov_tree(12)
        for t in tree:
            a, b, c = t.as_tuple()
            self.assertEqual(a * a + b * b + c * c, 3 * a * b * c)
        self.assertTrue({1, 2, 5, 13, 29, 34, 169, 194, 433} <= set(markov_numbers(12)))

    def test_membership(self):
        self.assertEqual(is_markov_number(5, 50), MarkovMembership.YES)
        self.assertEqual(is_markov_number(2, 20), MarkovMembership.YES)
        self.assertEqual(is_markov_number(1, 1), MarkovMembership.YES)
        self.assertEqual(is_markov_number(433, 4330), MarkovMembership.YES)
        self.assertEqual(is_markov_number(17, 10 ** 6), MarkovMembership.NO_BELOW_BOUND)
        self.assertEqual(is_markov_number(17, 10), MarkovMembership.INCONCLUSIVE)

    def test_membership_agrees_with_tree(self):
        numbers = set(markov_numbers(8))
        for p in range(1, 200):
            expected = MarkovMembership.YES if p in numbers else MarkovMembership.NO_BELOW_BOUND
            self.assertEqual(is_markov_number(p, 10 * p), expected)

    def test_q_candidates(self):
        self.assertEqual(markov_q_candidates(MarkovTriple(1, 2, 5)), (frozenset(), frozenset({1}), frozenset({1, 4})))
        self.assertEqual(markov_q_candidates(MarkovTriple(1, 1, 2))[2], frozenset({1}))
        self.assertEqual(markov_q_candidates(MarkovTriple(1, 1, 1)), (frozenset(),) * 3)

    def test_q_candidates_divide_q2_plus_9(self):
        for t in markov_tree(12):
            for p, qs in zip(t.as_tuple(), markov_q_candidates(t)):
                for q in qs:
                    self.assertTrue(divides_q2_plus_9(p, q))


class TestFibonacci(unittest.TestCase):

    def test_odd_fibonacci(self):
        self.assertEqual([odd_fibonacci(n) for n in range(1, 6)], [1, 2, 5, 13, 34])
        with self.assertRaises(InvalidInputError):
            odd_fibonacci(0)

    def test_examples(self):
        self.assertEqual(hj_evaluate(owens_string(0)), Fraction(25, 9))
        self.assertEqual(hj_evaluate(owens_string(1)), Fraction(169, 64))
        self.assertEqual(boundary_pq(1, 1), (odd_fibonacci(4), odd_fibonacci(3)))

    def test_fibonacci_cases(self):
        for k in range(-1, 16):
            with self.subTest(k=k):
                self.assertTrue(verify_fibonacci_case(k))


class TestVerdict(unittest.TestCase):

    def test_conic_complement(self):
        v = symplectic_verdict(-1, 7)
        self.assertEqual((v.p, v.q), (2, 1))
        self.assertEqual(v.symplectic, "yes")
        self.assertTrue(v.divides_q2_plus_9)
        self.assertEqual(v.markov, MarkovMembership.YES)

    def test_obstructed(self):
        v = symplectic_verdict(0, 3)
        self.assertEqual((v.p, v.q, v.symplectic, v.reason), (17, 4, "obstructed", "q2_plus_9"))
        self.assertEqual(v.markov, MarkovMembership.NO_BELOW_BOUND)
        v = symplectic_verdict(0, 1)
        self.assertEqual((v.p, v.q, v.symplectic), (5, 2, "obstructed"))
        self.assertEqual(v.markov, MarkovMembership.YES)

    def test_to_dict(self):
        self.assertEqual(symplectic_verdict(0, 3).to_dict(), {
            "k": "0", "m": "3", "p": "17", "q": "4", "lens": {"p": "289", "q": "67"},
            "smooth": "yes", "symplectic": "obstructed", "reason": "q2_plus_9",
            "markov": "no_below_bound", "divides_q2_plus_9": False,
        })

    def test_grid(self):
        for k in range(0, 11):
            for m in range(1, 16, 2):
                v = symplectic_verdict(k, m)
                self.assertTrue(v.smooth)
                self.assertEqual(v.symplectic, "obstructed")
                self.assertFalse(v.divides_q2_plus_9)

    def test_even_m(self):
        with self.assertRaises(InvalidInputError):
            symplectic_verdict(0, 2)


if __name__ == '__main__':
    unittest.main()
