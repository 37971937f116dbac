"""Borel–Bott–Weil on the even isotropic Grassmannian IGr(k, 2n).

U^λ is extended by zeros to a weight of Sp_2n, shifted by ρ = (n, …, 1)
and straightened by a signed permutation. A singular shifted weight (a zero
entry, or two entries of equal absolute value) gives no cohomology;
otherwise the cohomology sits in the degree equal to the length of the
straightening element.
"""
from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction
from typing import ClassVar, Optional, Sequence, Tuple

from loguru import logger

from igr.errors import PreconditionError, RankMismatch
from igr.spaces import EvenSpace
from igr.weights import GLWeight, SpWeight, TwistedBundle, dual


@dataclasses.dataclass(frozen=True)
class CohomologyResult:
    """Either zero, or a single irreducible Sp_2n-module in one degree."""

    degree: int = 0
    rep: Optional[SpWeight] = None

    ZERO: ClassVar[CohomologyResult]

    @property
    def is_zero(self) -> bool:
        return self.rep is None

    @property
    def dimension(self) -> int:
        return 0 if self.rep is None else dim_sp(self.rep)

    def to_json(self) -> dict:
        if self.rep is None:
            return {"zero": True}
        return {
            "degree": self.degree,
            "rep": list(self.rep.entries),
            "dim": self.dimension,
        }

    def __str__(self) -> str:
        if self.rep is None:
            return "0"
        return f"{self.rep.text()}[-{self.degree}] (dim {self.dimension})"


CohomologyResult.ZERO = CohomologyResult()


def rho(n: int) -> Tuple[int, ...]:
    return tuple(range(n, 0, -1))


def is_singular(v: Sequence[int]) -> bool:
    absolute = [abs(x) for x in v]
    return 0 in absolute or len(set(absolute)) != len(absolute)


def bruhat_length(v: Sequence[int]) -> int:
    """Number of positive roots of C_n that are negative on v.

    >>> bruhat_length((5, 4, -3, 2, 1))
    5
    >>> bruhat_length((5, 3, -4, 2, 1))
    6
    """
    n = len(v)
    length = sum(1 for x in v if x < 0)
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] < v[j]:
                length += 1
            if v[i] + v[j] < 0:
                length += 1
    return length


@functools.lru_cache(maxsize=None)
def _bbw(n: int, entries: Tuple[int, ...]) -> CohomologyResult:
    gamma = entries + (0,) * (n - len(entries))
    v = tuple(g + r for g, r in zip(gamma, rho(n)))
    if is_singular(v):
        return CohomologyResult.ZERO
    straight = sorted((abs(x) for x in v), reverse=True)
    rep = SpWeight(tuple(s - r for s, r in zip(straight, rho(n))))
    return CohomologyResult(bruhat_length(v), rep)


def bbw_even(space: EvenSpace, b: TwistedBundle) -> CohomologyResult:
    if b.k != space.k:
        raise RankMismatch(f"rank {b.k} bundle on {space}")
    result = _bbw(space.n, b.absorbed.entries)
    logger.debug("H*({}, {}) = {}", space, b, result)
    return result


@functools.lru_cache(maxsize=None)
def _dim_sp(entries: Tuple[int, ...]) -> int:
    n = len(entries)
    r = rho(n)
    v = [e + x for e, x in zip(entries, r)]
    value = Fraction(1)
    for i in range(n):
        value *= Fraction(v[i], r[i])
        for j in range(i + 1, n):
            value *= Fraction((v[i] - v[j]) * (v[i] + v[j]), (r[i] - r[j]) * (r[i] + r[j]))
    assert value.denominator == 1, entries
    return int(value)


def dim_sp(mu: SpWeight) -> int:
    """Weyl dimension formula for Sp_2n.

    >>> dim_sp(SpWeight((1, 0, 0, 0)))
    8
    >>> dim_sp(SpWeight((1, 1, 0, 0, 0)))
    44
    """
    return _dim_sp(mu.entries)


def serre_dual(space: EvenSpace, b: TwistedBundle) -> TwistedBundle:
    """U^{−λ}(−w), so that H^q(U^λ) is dual to H^{d−q} of the result."""
    return TwistedBundle(dual(b.absorbed), -space.index)


def vanish_even(space: EvenSpace, lam: GLWeight) -> bool:
    """Sufficient condition for U^λ to be acyclic on IGr(k, 2n+2).

    Here `space` is IGr(k, 2n+2), so its own n is one more than the n of
    the inequalities.
    """
    if lam.k != space.k:
        raise RankMismatch(f"rank {lam.k} weight on {space}")
    if space.n - 1 < space.k:
        raise PreconditionError(f"{space} is not of the form IGr(k, 2n+2) with k <= n")
    n, k = space.n - 1, space.k
    return (
        lam[-1] < 0
        and lam[0] >= -2 * (n + 1) + k
        and all(g <= 2 * (n + 2 - k) - 1 for g in lam.gaps())
    )

