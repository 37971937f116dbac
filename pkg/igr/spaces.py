from __future__ import annotations

import dataclasses
import re
from typing import ClassVar, Union

from igr.errors import ParseError, PreconditionError

_SPACE_RE = re.compile(r"^igr:(\d+):(\d+)$")


@dataclasses.dataclass(frozen=True)
class EvenSpace:
    """IGr(k, 2n), homogeneous under Sp_2n."""

    k: int
    n: int

    IGR_3_10: ClassVar[EvenSpace]

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise PreconditionError(f"IGr({self.k},{2 * self.n}) needs 1 <= k <= n")

    @property
    def m(self) -> int:
        return 2 * self.n

    @property
    def index(self) -> int:
        return 2 * self.n + 1 - self.k

    @property
    def dimension(self) -> int:
        return self.k * (4 * self.n - 3 * self.k + 1) // 2

    def __str__(self) -> str:
        return f"igr:{self.k}:{self.m}"


@dataclasses.dataclass(frozen=True)
class OddSpace:
    """IGr(k, 2n+1), a hyperplane section of IGr(k, 2n+2)."""

    k: int
    n: int

    IGR_3_9: ClassVar[OddSpace]

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise PreconditionError(f"IGr({self.k},{2 * self.n + 1}) needs 1 <= k <= n")

    @property
    def m(self) -> int:
        return 2 * self.n + 1

    @property
    def ambient(self) -> EvenSpace:
        return EvenSpace(self.k, self.n + 1)

    @property
    def index(self) -> int:
        return 2 * self.n + 2 - self.k

    @property
    def dimension(self) -> int:
        return self.k * (4 * self.n - 3 * self.k + 3) // 2

    def __str__(self) -> str:
        return f"igr:{self.k}:{self.m}"


EvenSpace.IGR_3_10 = EvenSpace(3, 5)
OddSpace.IGR_3_9 = OddSpace(3, 4)

Space = Union[EvenSpace, OddSpace]


def parse_space(text: str) -> Space:
    """`igr:k:m`; the parity of m picks the even or odd Grassmannian.

    >>> parse_space("igr:3:9")
    OddSpace(k=3, n=4)
    >>> parse_space("igr:3:10")
    EvenSpace(k=3, n=5)
    """
    match = _SPACE_RE.match(text.strip())
    if match is None:
        raise ParseError(f"not a space literal: {text!r} (expected igr:k:m)")
    k, m = (int(g) for g in match.groups())
    if m % 2 == 0:
        return EvenSpace(k, m // 2)
    return OddSpace(k, (m - 1) // 2)
