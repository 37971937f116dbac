from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Optional

from igr.errors import PreconditionError
from igr.schur import binomial
from igr.spaces import EvenSpace, OddSpace, Space


@dataclasses.dataclass(frozen=True)
class SpaceInvariants:
    space: str
    dimension: int
    index: int
    k0_rank: int

    @property
    def lefschetz_length(self) -> Optional[int]:
        """Length p of a rectangular Lefschetz basis, when the index divides the rank."""
        if self.k0_rank % self.index:
            return None
        return self.k0_rank // self.index

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "dimension": self.dimension,
            "index": self.index,
            "k0_rank": self.k0_rank,
            "lefschetz_length": self.lefschetz_length,
        }

    def serialize(self, out) -> None:
        print(f"space      {self.space}", file=out)
        print(f"dimension  {self.dimension}", file=out)
        print(f"index      {self.index}", file=out)
        print(f"rank K0    {self.k0_rank}", file=out)
        p = self.lefschetz_length
        print(f"basis size {'-' if p is None else p}", file=out)

    @staticmethod
    def for_space(space: Space) -> SpaceInvariants:
        if isinstance(space, EvenSpace):
            return invariants_even(space.k, space.n)
        return invariants_odd(space.k, space.n)


def _even_rank(k: int, n: int) -> int:
    if k == 0:
        return 1
    return binomial(n, k) * 2 ** k


def invariants_even(k: int, n: int) -> SpaceInvariants:
    """
    >>> invariants_even(3, 5).k0_rank
    80
    """
    space = EvenSpace(k, n)
    return SpaceInvariants(str(space), space.dimension, space.index, _even_rank(k, n))


def invariants_odd(k: int, n: int) -> SpaceInvariants:
    """
    >>> inv = invariants_odd(3, 4)
    >>> inv.dimension, inv.index, inv.k0_rank, inv.lefschetz_length
    (15, 7, 56, 8)
    """
    space = OddSpace(k, n)
    rank = Fraction(binomial(n, k - 1) * 2 ** (k - 1) * (2 * n + 2 - k), k)
    assert rank.denominator == 1, (k, n)
    return SpaceInvariants(str(space), space.dimension, space.index, int(rank))


def divisibility_check(n: int) -> Optional[int]:
    """Size of a rectangular Lefschetz basis on IGr(3, 2n+1), if one can exist.

    >>> divisibility_check(4)
    8
    >>> divisibility_check(2) is None
    True
    """
    if n < 2:
        raise PreconditionError(f"divisibility check needs n >= 2, got {n}")
    if n % 3 == 2:
        return None
    return 2 * n * (n - 1) // 3


def k0_additivity(k: int, n: int) -> bool:
    """rank K0(IGr(k,2n+1)) = rank K0(IGr(k,2n)) + rank K0(IGr(k−1,2n))."""
    return invariants_odd(k, n).k0_rank == _even_rank(k, n) + _even_rank(k - 1, n)
