"""Tensor products of Schur bundles.

Everything here works on GL_k weights with arbitrary (possibly negative)
integer entries. Negative entries are handled by twisting with a power of
the determinant until both factors are partitions, running the
Littlewood–Richardson rule on partitions, and twisting back.
"""
from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
import math
import operator
from fractions import Fraction
from typing import Counter, Dict, Iterable, Iterator, List, Sequence, Tuple

import igr.parse as parse
from igr.errors import NotDominant, RankMismatch
from igr.weights import GLWeight, dual


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """A multiset of dominant weights of one rank."""

    k: int
    terms: Tuple[Tuple[GLWeight, int], ...]

    @staticmethod
    def of(k: int, counts: Dict[GLWeight, int]) -> Decomposition:
        for weight, mult in counts.items():
            if weight.k != k:
                raise RankMismatch(f"{weight} in a rank {k} decomposition")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {weight}")
        items = sorted(
            ((w, m) for w, m in counts.items() if m),
            key=lambda item: item[0].lex_key(),
        )
        return Decomposition(k, tuple(items))

    @staticmethod
    def single(weight: GLWeight) -> Decomposition:
        return Decomposition(weight.k, ((weight, 1),))

    def __iter__(self) -> Iterator[Tuple[GLWeight, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Tuple[Tuple[GLWeight, int], ...]:
        return self.terms

    def weights(self) -> List[GLWeight]:
        return [w for w, _ in self.terms]

    def as_dict(self) -> Dict[GLWeight, int]:
        return dict(self.terms)

    def multiplicity(self, weight: GLWeight) -> int:
        return self.as_dict().get(weight, 0)

    def total_dimension(self) -> int:
        return sum(mult * dim_gl(w) for w, mult in self.terms)

    def shift(self, l: int) -> Decomposition:
        return Decomposition(self.k, tuple((w.shift(l), m) for w, m in self.terms))

    def dual(self) -> Decomposition:
        return Decomposition.of(self.k, {dual(w): m for w, m in self.terms})

    def serialize(self, out) -> None:
        for weight, mult in self.terms:
            print(f"{weight.text()} x{mult}", file=out)

    def serialize_to_string(self) -> str:
        return parse.serialize_to_string_impl(self.serialize)

    def to_json(self) -> List[dict]:
        return [
            {"weight": list(w.entries), "multiplicity": m} for w, m in self.terms
        ]


def _dominant(entries: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(entries, entries[1:]))


def pieri_sym(lam: GLWeight, j: int) -> Decomposition:
    """U^λ ⊗ S^j U*: every γ with |γ| = |λ|+j interleaving λ.

    >>> [w.entries for w in pieri_sym(GLWeight.of(0, 0, -3), 2).weights()]
    [(2, 0, -3), (1, 0, -2), (0, 0, -1)]
    """
    if j < 0:
        raise ValueError(f"pieri_sym needs j >= 0, got {j}")
    k = lam.k
    ranges = [range(lam[i], lam[i - 1] + 1) for i in range(1, k)]
    counts = {}
    for tail in itertools.product(*ranges):
        head = lam[0] + j - sum(g - lam[i + 1] for i, g in enumerate(tail))
        if head < lam[0]:
            continue
        counts[GLWeight((head,) + tail)] = 1
    return Decomposition.of(k, counts)


def pieri_wedge(lam: GLWeight, j: int) -> Decomposition:
    """U^λ ⊗ ∧^j U*: add one box to j distinct rows."""
    k = lam.k
    if not 0 <= j <= k:
        raise ValueError(f"pieri_wedge needs 0 <= j <= {k}, got {j}")
    counts = {}
    for rows in itertools.combinations(range(k), j):
        entries = list(lam.entries)
        for r in rows:
            entries[r] += 1
        if _dominant(entries):
            counts[GLWeight(tuple(entries))] = 1
    return Decomposition.of(k, counts)


def _horizontal_strips(shape: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Ways to add `size` boxes to `shape`, at most one per column."""
    k = len(shape)

    def rec(i: int, left: int) -> Iterator[Tuple[int, ...]]:
        if i == k:
            if left == 0:
                yield ()
            return
        top = left if i == 0 else min(left, shape[i - 1] - shape[i])
        for d in range(top, -1, -1):
            for rest in rec(i + 1, left - d):
                yield (d,) + rest

    return rec(0, size)


def _lattice(strip: Tuple[int, ...], previous: Tuple[int, ...]) -> bool:
    # Reading rows top to bottom, right to left, the new label never
    # outnumbers the label before it.
    seen_new = seen_previous = 0
    for new, old in zip(strip, previous):
        seen_new += new
        if seen_new > seen_previous:
            return False
        seen_previous += old
    return True


@functools.lru_cache(maxsize=None)
def _lr_partitions(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    content = [b for b in beta if b > 0]
    results: Counter[Tuple[int, ...]] = collections.Counter()

    def place(label: int, shape: Tuple[int, ...], previous: Tuple[int, ...]) -> None:
        if label == len(content):
            results[shape] += 1
            return
        for strip in _horizontal_strips(shape, content[label]):
            if label and not _lattice(strip, previous):
                continue
            place(label + 1, tuple(map(operator.add, shape, strip)), strip)

    place(0, alpha, (0,) * len(alpha))
    return dict(results)


def lr(alpha: GLWeight, beta: GLWeight) -> Decomposition:
    """Full Littlewood–Richardson decomposition of U^α ⊗ U^β.

    >>> lr(GLWeight.of(1, 0, 0), GLWeight.of(1, 0, 0)).weights()
    [GLWeight(entries=(2, 0, 0)), GLWeight(entries=(1, 1, 0))]
    """
    if alpha.k != beta.k:
        raise RankMismatch(f"cannot tensor rank {alpha.k} with rank {beta.k}")
    shift = alpha[-1] + beta[-1]
    a = tuple(e - alpha[-1] for e in alpha)
    b = tuple(e - beta[-1] for e in beta)
    # The product is symmetric; fill the smaller content.
    if sum(b) > sum(a):
        a, b = b, a
    counts = _lr_partitions(a, b)
    return Decomposition.of(
        alpha.k, {GLWeight(tuple(e + shift for e in g)): m for g, m in counts.items()}
    )


def lr_many(weights: Iterable[GLWeight]) -> Decomposition:
    weights = list(weights)
    if not weights:
        raise ValueError("lr_many needs at least one factor")
    total: Dict[GLWeight, int] = {weights[0]: 1}
    for factor in weights[1:]:
        nxt: Counter[GLWeight] = collections.Counter()
        for weight, mult in total.items():
            for gamma, m in lr(weight, factor):
                nxt[gamma] += mult * m
        total = dict(nxt)
    return Decomposition.of(weights[0].k, total)


def pieri_oracle(alpha: GLWeight, beta: GLWeight) -> Decomposition:
    """U^α ⊗ U^β through Jacobi–Trudi, s_β = det(h_{β_i−i+j}).

    Each permutation term is a product of complete symmetric powers,
    applied to U^α one Pieri step at a time. It shares no code with `lr`.
    """
    if alpha.k != beta.k:
        raise RankMismatch(f"cannot tensor rank {alpha.k} with rank {beta.k}")
    k = beta.k
    base = beta[-1]
    b = [e - base for e in beta]
    signed: Counter[GLWeight] = collections.Counter()
    for perm in itertools.permutations(range(k)):
        degrees = [b[i] - i + perm[i] for i in range(k)]
        if any(d < 0 for d in degrees):
            continue
        sign = _permutation_sign(perm)
        current: Counter[GLWeight] = collections.Counter({alpha: 1})
        for d in degrees:
            step: Counter[GLWeight] = collections.Counter()
            for weight, mult in current.items():
                for gamma, _ in pieri_sym(weight, d):
                    step[gamma] += mult
            current = step
        for weight, mult in current.items():
            signed[weight.shift(base)] += sign * mult
    if any(m < 0 for m in signed.values()):
        raise ArithmeticError(f"negative coefficient expanding {alpha} x {beta}")
    return Decomposition.of(k, {w: m for w, m in signed.items() if m})


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


@functools.lru_cache(maxsize=None)
def _dim_gl(entries: Tuple[int, ...]) -> int:
    k = len(entries)
    value = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            value *= Fraction(entries[i] - entries[j] + j - i, j - i)
    assert value.denominator == 1, entries
    return int(value)


def dim_gl(lam: GLWeight) -> int:
    """Weyl dimension formula for GL_k.

    >>> dim_gl(GLWeight.of(2, 0, -1))
    15
    """
    if not _dominant(lam.entries):
        raise NotDominant(f"{lam} is not dominant")
    return _dim_gl(lam.entries)


def binomial(m: int, nu: int) -> int:
    if nu < 0 or nu > m:
        return 0
    return math.comb(m, nu)
