from __future__ import annotations

import dataclasses
import functools
import re
from typing import Optional, Sequence, Tuple

import igr.parse as parse
from igr.errors import NotDominant, ParseError, RankMismatch

_BUNDLE_RE = re.compile(r"^U\[([^\]]*)\](?:\((-?\d+)\))?$")
_SP_RE = re.compile(r"^W\[([^\]]*)\]$")


def _check_rank(first: GLWeight, second: GLWeight) -> None:
    if first.k != second.k:
        raise RankMismatch(f"rank {first.k} weight compared with rank {second.k}")


@functools.total_ordering
@dataclasses.dataclass(frozen=True, eq=True)
class GLWeight:
    """A dominant weight of GL_k, i.e. a nonincreasing tuple of integers.

    The weight labels both the irreducible representation and the Schur
    bundle U^λ built from the dual tautological bundle.
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise NotDominant("a weight needs at least one entry")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise NotDominant(f"{entries} is not nonincreasing")

    @staticmethod
    def of(*entries: int) -> GLWeight:
        return GLWeight(tuple(entries))

    @staticmethod
    def zero(k: int) -> GLWeight:
        return GLWeight((0,) * k)

    @staticmethod
    def constant(k: int, l: int) -> GLWeight:
        return GLWeight((l,) * k)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        """|λ|, the sum of the entries."""
        return sum(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __lt__(self, other: GLWeight) -> bool:
        return leq_lex(self, other)

    def shift(self, l: int) -> GLWeight:
        """
        >>> GLWeight.of(0, 0, -1).shift(2)
        GLWeight(entries=(2, 2, 1))
        """
        return GLWeight(tuple(e + l for e in self.entries))

    def lex_key(self) -> Tuple[int, ...]:
        return tuple(reversed(self.entries))

    def gaps(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.entries, self.entries[1:]))

    @staticmethod
    def parse(text: str) -> GLWeight:
        return TwistedBundle.parse(text).absorbed

    def serialize(self, out) -> None:
        print(self.text(), file=out)

    def text(self) -> str:
        return "U[" + ",".join(str(e) for e in self.entries) + "]"

    def __str__(self) -> str:
        return self.text()


@dataclasses.dataclass(frozen=True, eq=True)
class SpWeight:
    """A dominant weight of Sp_2n: nonincreasing and nonnegative."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(a < b for a, b in zip(entries, entries[1:])) or (
            entries and entries[-1] < 0
        ):
            raise NotDominant(f"{entries} is not a dominant Sp weight")

    @staticmethod
    def zero(n: int) -> SpWeight:
        return SpWeight((0,) * n)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_trivial(self) -> bool:
        return not any(self.entries)

    @staticmethod
    def parse(text: str) -> SpWeight:
        match = _SP_RE.match(text.replace(" ", ""))
        if match is None:
            raise ParseError(f"not an Sp weight literal: {text!r}")
        return SpWeight(tuple(parse.parse_int_list(match.group(1))))

    def text(self) -> str:
        return "W[" + ",".join(str(e) for e in self.entries) + "]"

    def __str__(self) -> str:
        return self.text()


@dataclasses.dataclass(frozen=True, eq=False)
class TwistedBundle:
    """U^λ(t). Equality and hashing use the absorbed weight λ+(t,…,t).

    The pair (weight, twist) is kept as given so that the literal it was
    parsed from prints back unchanged; `twist` is None when the literal had
    no `(t)` suffix.
    """

    weight: GLWeight
    twist: Optional[int] = None

    @property
    def t(self) -> int:
        return 0 if self.twist is None else self.twist

    @property
    def k(self) -> int:
        return self.weight.k

    @property
    def absorbed(self) -> GLWeight:
        return self.weight.shift(self.t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedBundle):
            return NotImplemented
        return self.absorbed == other.absorbed

    def __hash__(self) -> int:
        return hash(self.absorbed)

    def __lt__(self, other: TwistedBundle) -> bool:
        return leq_lex(self.absorbed, other.absorbed)

    def twisted(self, l: int) -> TwistedBundle:
        return twist(self, l)

    def normalized(self) -> TwistedBundle:
        """Display form with the middle entry moved into the twist.

        Only odd ranks have a middle entry; other ranks keep the raw
        absorbed weight.

        >>> TwistedBundle(GLWeight.of(-1, -1, -4)).normalized().text()
        'U[0,0,-3](-1)'
        >>> TwistedBundle(GLWeight.of(3, 0, 0)).normalized().text()
        'U[3,0,0]'
        """
        absorbed = self.absorbed
        if absorbed.k % 2 == 0:
            return TwistedBundle(absorbed)
        t = absorbed[absorbed.k // 2]
        return TwistedBundle(absorbed.shift(-t), t if t != 0 else None)

    @staticmethod
    def of(*entries: int, t: Optional[int] = None) -> TwistedBundle:
        return TwistedBundle(GLWeight(tuple(entries)), t)

    @staticmethod
    def parse(text: str) -> TwistedBundle:
        """
        >>> TwistedBundle.parse("U[0,0,-1](2)") == TwistedBundle.of(2, 2, 1)
        True
        >>> TwistedBundle.parse("U[1,0,-1](-1)").text()
        'U[1,0,-1](-1)'
        """
        match = _BUNDLE_RE.match(text.strip().replace(" ", ""))
        if match is None:
            raise ParseError(f"not a bundle literal: {text!r}")
        entries, suffix = match.groups()
        weight = GLWeight(tuple(parse.parse_int_list(entries)))
        return TwistedBundle(weight, None if suffix is None else int(suffix))

    def serialize(self, out) -> None:
        print(self.text(), file=out)

    def text(self) -> str:
        if self.twist is None:
            return self.weight.text()
        return f"{self.weight.text()}({self.twist})"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"TwistedBundle({self.text()})"


def dual(weight: GLWeight) -> GLWeight:
    """The weight of the dual representation, −λ read backwards.

    >>> dual(GLWeight.of(3, 0, 0))
    GLWeight(entries=(0, 0, -3))
    """
    return GLWeight(tuple(-e for e in reversed(weight.entries)))


def leq_inclusion(mu: GLWeight, lam: GLWeight) -> bool:
    _check_rank(mu, lam)
    return all(m <= l for m, l in zip(mu, lam))


def leq_lex(beta: GLWeight, alpha: GLWeight) -> bool:
    """Strict lexicographic order with entries read from right to left.

    >>> leq_lex(GLWeight.of(2, 0, -1), GLWeight.of(0, 0, 0))
    True
    >>> leq_lex(GLWeight.of(0, 0, 0), GLWeight.of(0, 0, 0))
    False
    """
    _check_rank(beta, alpha)
    return beta.lex_key() < alpha.lex_key()


def twist(b: TwistedBundle, l: int) -> TwistedBundle:
    if l == 0:
        return b
    return TwistedBundle(b.weight, b.t + l)


def bundles(weights: Sequence[Sequence[int]]) -> Tuple[TwistedBundle, ...]:
    return tuple(TwistedBundle(GLWeight(tuple(w))) for w in weights)
