import random
import unittest

from conftest import SEED
from ordcore.twosat import Assignment, TwoSatError, TwoSatInstance, check, solve

import oracles


def random_instance(rng: random.Random, max_vars: int = 12, max_clauses: int = 40):
    v = rng.randint(1, max_vars)
    c = rng.randint(0, max_clauses)
    clauses = tuple(
        (
            (rng.randrange(v), rng.random() < 0.5),
            (rng.randrange(v), rng.random() < 0.5),
        )
        for _ in range(c)
    )
    return TwoSatInstance(v, clauses)


class TestSolve(unittest.TestCase):
    def test_unit_forces_true(self):
        inst = TwoSatInstance(1, (((0, True), (0, True)),))
        a = solve(inst)
        self.assertEqual(a.values, (True,))

    def test_contradiction(self):
        inst = TwoSatInstance(
            1, (((0, True), (0, True)), ((0, False), (0, False)))
        )
        self.assertIsNone(solve(inst))

    def test_implication_chain(self):
        # x0, x0 -> x1, x1 -> x2 forces all three true
        inst = TwoSatInstance(
            3,
            (
                ((0, True), (0, True)),
                ((0, False), (1, True)),
                ((1, False), (2, True)),
            ),
        )
        a = solve(inst)
        self.assertEqual(a.values, (True, True, True))

    def test_empty_clause_set(self):
        a = solve(TwoSatInstance(3, ()))
        self.assertIsNotNone(a)
        self.assertEqual(len(a.values), 3)

    def test_solution_always_checks(self):
        rng = random.Random(SEED)
        for _ in range(200):
            inst = random_instance(rng)
            a = solve(inst)
            if a is not None:
                self.assertTrue(check(inst, a))

    def test_agrees_with_truth_table_exhaustive(self):
        # every 2-CNF on 3 variables with clauses drawn from a fixed pool
        pool = [
            ((a, pa), (b, pb))
            for a in range(3)
            for b in range(3)
            for pa in (False, True)
            for pb in (False, True)
        ]
        rng = random.Random(SEED + 1)
        for _ in range(300):
            clauses = tuple(rng.sample(pool, rng.randint(0, 8)))
            inst = TwoSatInstance(3, clauses)
            got = solve(inst)
            want = oracles.twosat(3, clauses)
            self.assertEqual(got is not None, want is not None)
            if got is not None:
                self.assertTrue(check(inst, got))

    def test_agrees_with_truth_table_random(self):
        rng = random.Random(SEED + 2)
        for _ in range(500):
            inst = random_instance(rng)
            got = solve(inst)
            want = oracles.twosat(inst.var_count, inst.clauses)
            self.assertEqual(got is not None, want is not None)
            if got is not None:
                self.assertTrue(check(inst, got))

    def test_deterministic(self):
        rng = random.Random(SEED + 3)
        for _ in range(50):
            inst = random_instance(rng)
            first = solve(inst)
            self.assertEqual(first, solve(inst))


class TestValidation(unittest.TestCase):
    def test_variable_out_of_range(self):
        with self.assertRaises(TwoSatError):
            TwoSatInstance(2, (((2, True), (0, True)),))

    def test_check_examples(self):
        inst = TwoSatInstance(2, (((0, True), (1, False)),))
        self.assertTrue(check(inst, Assignment((True, True))))
        self.assertTrue(check(inst, Assignment((False, False))))
        self.assertFalse(check(inst, Assignment((False, True))))

    def test_check_length_error(self):
        inst = TwoSatInstance(2, ())
        with self.assertRaises(TwoSatError):
            check(inst, Assignment((True,)))


if __name__ == "__main__":
    unittest.main()
