import unittest

from igr.diagram import DiagramConfig, render_ascii, render_svg


class TestAscii(unittest.TestCase):
    def test_small_triangle(self):
        got = render_ascii({(0, 0): [0, 1, 2], (1, 1): [2]}, 2)
        want = "\n".join(
            [
                "j=2 |     .",
                "j=1 |     .     2",
                "j=0 |   0-2     .     .",
                "    +------------------",
                "        i=0   i=1   i=2",
            ]
        ) + "\n"
        self.assertEqual(want, got)

    def test_width(self):
        got = render_ascii({}, 2, DiagramConfig(ascii_width=3))
        self.assertEqual("j=0 |  .  .  .", got.splitlines()[2])


class TestSvg(unittest.TestCase):
    def test_cell_colours(self):
        coverage = {(0, 0): [0, 1, 2], (1, 0): [1]}
        text = str(render_svg(coverage, 2, range(0, 3)))
        self.assertIn('<svg width="216" height="216"', text)
        self.assertIn(
            '<rect x="24" y="136" width="56" height="56" stroke="rgb(0, 0, 0)" fill="rgb(0, 0, 255)" opacity="0.3" />',
            text,
        )
        self.assertIn(
            '<rect x="80" y="136" width="56" height="56" stroke="rgb(0, 0, 0)" fill="rgb(255, 165, 0)" opacity="0.3" />',
            text,
        )
        self.assertIn(
            '<rect x="136" y="136" width="56" height="56" stroke="rgb(0, 0, 0)" fill="none" opacity="1" />', text
        )

    def test_one_cell_per_monomial(self):
        graphic = render_svg({}, 4, range(0, 7))
        self.assertEqual(28, str(graphic).count("<rect"))


if __name__ == "__main__":
    unittest.main()
