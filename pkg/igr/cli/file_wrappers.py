import contextlib
import sys
from pathlib import Path


class StandardStream(contextlib.AbstractContextManager):
    """sys.stdin or sys.stdout, looked up on entry and never closed."""

    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        return getattr(sys, self.name)

    def __exit__(self, _type, _value, _traceback):
        return None


def input_file(path: str):
    """`-` reads stdin."""
    if path == "-":
        return StandardStream("stdin")
    return Path(path).open("r")


def output_file(path: str):
    """`-` writes to stdout; parent directories are created."""
    if path == "-":
        return StandardStream("stdout")
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    return out.open("w")
