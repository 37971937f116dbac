import contextlib
import io
import tempfile
import unittest
from pathlib import Path

from igr.cli.file_wrappers import input_file, output_file


class TestFileWrappers(unittest.TestCase):
    def test_dash_is_stdout(self):
        sio = io.StringIO()
        with contextlib.redirect_stdout(sio):
            with output_file("-") as f:
                f.write("hello")
        self.assertEqual("hello", sio.getvalue())
        self.assertFalse(sio.closed)

    def test_creates_parents(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "a" / "b" / "out.txt"
            with output_file(str(path)) as f:
                f.write("U[0,0,0]\n")
            with input_file(str(path)) as f:
                self.assertEqual(["U[0,0,0]\n"], f.readlines())


if __name__ == "__main__":
    unittest.main()
