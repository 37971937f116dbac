import io
from typing import Callable, Iterable, Iterator, List, TextIO

from igr.errors import ParseError


def serialize_to_string_impl(serialize: Callable[[TextIO], None]) -> str:
    sio = io.StringIO()
    serialize(sio)
    return sio.getvalue().strip()


def remove_comments(lines: Iterable[str]) -> Iterator[str]:
    """Drops blank lines, full-line `#` comments and trailing comments."""
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        yield line


def parse_int_list(text: str) -> List[int]:
    """
    >>> parse_int_list("3, 0,-2")
    [3, 0, -2]
    """
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ParseError(f"not a list of integers: {text!r}") from e


def parse_range(text: str) -> range:
    """Parses an inclusive `a..b` range or a single integer.

    >>> list(parse_range("0..3"))
    [0, 1, 2, 3]
    >>> list(parse_range("-2"))
    [-2]
    """
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError as e:
        raise ParseError(f"not a twist range: {text!r}") from e
