import random
import unittest

from igr.errors import RankMismatch
from igr.schur import (
    Decomposition,
    binomial,
    dim_gl,
    lr,
    lr_many,
    pieri_oracle,
    pieri_sym,
    pieri_wedge,
)
from igr.weights import GLWeight


def random_weight(rng: random.Random, k: int = 3, low: int = -3, high: int = 3) -> GLWeight:
    return GLWeight(tuple(sorted((rng.randint(low, high) for _ in range(k)), reverse=True)))


class TestPieri(unittest.TestCase):
    def test_sym_example(self):
        got = pieri_sym(GLWeight.of(0, 0, -3), 2)
        want = Decomposition.of(3, {GLWeight.of(2, 0, -3): 1, GLWeight.of(1, 0, -2): 1, GLWeight.of(0, 0, -1): 1})
        self.assertEqual(want, got)

    def test_sym_dimension(self):
        # 10 * 6 = 42 + 15 + 3
        got = pieri_sym(GLWeight.of(0, 0, -3), 2)
        self.assertEqual(60, got.total_dimension())

    def test_sym_zero(self):
        lam = GLWeight.of(2, 0, -1)
        self.assertEqual(Decomposition.single(lam), pieri_sym(lam, 0))

    def test_wedge(self):
        got = pieri_wedge(GLWeight.of(1, 0, 0), 2)
        self.assertEqual([GLWeight.of(2, 1, 0), GLWeight.of(1, 1, 1)], sorted(got.weights(), key=lambda w: w.lex_key()))

    def test_wedge_top(self):
        self.assertEqual(Decomposition.single(GLWeight.of(1, 1, 0)), pieri_wedge(GLWeight.of(0, 0, -1), 3))

    def test_wedge_out_of_range(self):
        with self.assertRaises(ValueError):
            pieri_wedge(GLWeight.of(0, 0, 0), 4)

    def test_sym_agrees_with_lr(self):
        rng = random.Random(7)
        for _ in range(100):
            lam = random_weight(rng)
            j = rng.randint(0, 4)
            self.assertEqual(pieri_sym(lam, j), lr(lam, GLWeight.of(j, 0, 0)), (lam, j))

    def test_wedge_agrees_with_lr(self):
        rng = random.Random(8)
        for _ in range(100):
            lam = random_weight(rng)
            j = rng.randint(0, 3)
            column = GLWeight((1,) * j + (0,) * (3 - j))
            self.assertEqual(pieri_wedge(lam, j), lr(lam, column), (lam, j))


class TestLittlewoodRichardson(unittest.TestCase):
    def test_square(self):
        got = lr(GLWeight.of(1, 0, 0), GLWeight.of(1, 0, 0))
        self.assertEqual({GLWeight.of(2, 0, 0): 1, GLWeight.of(1, 1, 0): 1}, got.as_dict())

    def test_multiplicity_two(self):
        # s_21 * s_21 contains s_321 twice.
        got = lr(GLWeight.of(2, 1, 0), GLWeight.of(2, 1, 0))
        self.assertEqual(2, got.multiplicity(GLWeight.of(3, 2, 1)))
        self.assertEqual(1, got.multiplicity(GLWeight.of(2, 2, 2)))

    def test_dual_pairing_contains_trivial_once(self):
        lam = GLWeight.of(2, 0, -1)
        got = lr(GLWeight.of(1, 0, -2), lam)
        self.assertEqual(1, got.multiplicity(GLWeight.zero(3)))

    def test_twist_commutes(self):
        alpha, beta = GLWeight.of(2, 0, -1), GLWeight.of(0, 0, -3)
        self.assertEqual(lr(alpha, beta).shift(2), lr(alpha.shift(2), beta))

    def test_symmetric(self):
        rng = random.Random(3)
        for _ in range(50):
            alpha, beta = random_weight(rng), random_weight(rng)
            self.assertEqual(lr(alpha, beta), lr(beta, alpha))

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatch):
            lr(GLWeight.of(1, 0), GLWeight.of(1, 0, 0))

    def test_against_pieri_oracle(self):
        rng = random.Random(2024)
        for _ in range(1000):
            alpha, beta = random_weight(rng), random_weight(rng)
            self.assertEqual(pieri_oracle(alpha, beta), lr(alpha, beta), (alpha, beta))

    def test_dimension_conserved(self):
        rng = random.Random(11)
        for _ in range(200):
            alpha, beta = random_weight(rng), random_weight(rng)
            self.assertEqual(dim_gl(alpha) * dim_gl(beta), lr(alpha, beta).total_dimension())

    def test_lr_many(self):
        v = GLWeight.of(1, 0, 0)
        got = lr_many([v, v, v])
        self.assertEqual(27, got.total_dimension())
        self.assertEqual(2, got.multiplicity(GLWeight.of(2, 1, 0)))
        self.assertEqual(1, got.multiplicity(GLWeight.of(1, 1, 1)))


class TestDimensions(unittest.TestCase):
    def test_dim_gl(self):
        self.assertEqual(1, dim_gl(GLWeight.of(-1, -1, -1)))
        self.assertEqual(10, dim_gl(GLWeight.of(3, 0, 0)))
        self.assertEqual(8, dim_gl(GLWeight.of(1, 0, -1)))

    def test_dim_dual(self):
        lam = GLWeight.of(4, 1, -2)
        self.assertEqual(dim_gl(lam), lr(lam, GLWeight.zero(3)).total_dimension())
        self.assertEqual(dim_gl(lam), Decomposition.single(lam).dual().total_dimension())

    def test_binomial(self):
        self.assertEqual(84, binomial(9, 3))
        self.assertEqual(0, binomial(9, 10))
        self.assertEqual(0, binomial(9, -1))


if __name__ == "__main__":
    unittest.main()
