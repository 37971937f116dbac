import unittest

from igr.errors import ParseError, PreconditionError
from igr.spaces import EvenSpace, OddSpace, parse_space


class TestSpaces(unittest.TestCase):
    def test_odd(self):
        x = OddSpace.IGR_3_9
        self.assertEqual((9, 15, 7), (x.m, x.dimension, x.index))
        self.assertEqual(EvenSpace.IGR_3_10, x.ambient)

    def test_even(self):
        x = EvenSpace.IGR_3_10
        self.assertEqual((10, 18, 8), (x.m, x.dimension, x.index))

    def test_hyperplane_section(self):
        for n in range(3, 7):
            odd = OddSpace(3, n)
            self.assertEqual(odd.ambient.dimension - 3, odd.dimension)
            self.assertEqual(odd.ambient.index - 1, odd.index)

    def test_parse_round_trip(self):
        for text in ("igr:3:9", "igr:3:10", "igr:2:7"):
            self.assertEqual(text, str(parse_space(text)))

    def test_parse_garbage(self):
        with self.assertRaises(ParseError):
            parse_space("IGr(3,9)")

    def test_k_too_large(self):
        with self.assertRaises(PreconditionError):
            parse_space("igr:4:7")


if __name__ == "__main__":
    unittest.main()
