"""Cohomology on the odd isotropic Grassmannian IGr(k, 2n+1).

X = IGr(k, 2n+1) is the zero locus of a section of Ũ* on X̃ = IGr(k, 2n+2),
so the Koszul resolution of O_X gives a spectral sequence with first page

    E1^{−p,q} = H^q(X̃, Ũ^λ ⊗ ∧^p Ũ)  ⇒  H^{q−p}(X, U^λ),   0 ≤ p ≤ k.

Every entry is computed exactly by Borel–Bott–Weil. The abutment is read
off when no differential can connect two nonzero entries, or when every
entry has total degree ≤ 0, in which case only H^0 survives and its
dimension is the Euler characteristic. Otherwise the answer is
Indeterminate and the page is returned as evidence.
"""
from __future__ import annotations

import collections
import dataclasses
import enum
import functools
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from igr.bbw import CohomologyResult, bbw_even, dim_sp, vanish_even
from igr.errors import PreconditionError, RankMismatch
from igr.schur import lr
from igr.spaces import EvenSpace, OddSpace, Space
from igr.weights import GLWeight, SpWeight, TwistedBundle

Position = Tuple[int, int]


def sign(degree: int) -> int:
    """(−1)^degree as an int, for negative degrees too.

    >>> sign(-3), sign(-4), sign(2)
    (-1, 1, 1)
    """
    return -1 if degree % 2 else 1


@dataclasses.dataclass(frozen=True)
class GradedDim:
    """A finitely supported map degree → dimension; zeros are dropped."""

    dims: Tuple[Tuple[int, int], ...] = ()

    @staticmethod
    def of(mapping: Dict[int, int]) -> GradedDim:
        return GradedDim(tuple(sorted((d, v) for d, v in mapping.items() if v)))

    @staticmethod
    def concentrated(degree: int, dim: int = 1) -> GradedDim:
        return GradedDim.of({degree: dim})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.dims)

    def get(self, degree: int) -> int:
        return self.as_dict().get(degree, 0)

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def euler(self) -> int:
        return sum(sign(d) * v for d, v in self.dims)

    def __add__(self, other: GradedDim) -> GradedDim:
        total = collections.Counter(self.as_dict())
        total.update(other.as_dict())
        return GradedDim.of(total)

    def scale(self, factor: int) -> GradedDim:
        return GradedDim.of({d: v * factor for d, v in self.dims})

    def to_json(self) -> Dict[str, int]:
        return {str(d): v for d, v in self.dims}

    def __str__(self) -> str:
        """
        >>> str(GradedDim.concentrated(4))
        'C[-4]'
        >>> str(GradedDim.of({0: 9, 2: 1}))
        'C^9 + C[-2]'
        >>> str(GradedDim())
        '0'
        """
        if not self.dims:
            return "0"
        parts = []
        for degree, dim in self.dims:
            base = "C" if dim == 1 else f"C^{dim}"
            parts.append(base if degree == 0 else f"{base}[{-degree}]")
        return " + ".join(parts)


@dataclasses.dataclass(frozen=True)
class PageEntry:
    rep: SpWeight
    mult: int
    summand: GLWeight

    @property
    def dimension(self) -> int:
        return self.mult * dim_sp(self.rep)


@dataclasses.dataclass(frozen=True)
class E1Page:
    """Nonzero first-page entries keyed by (p, q); the column is −p."""

    space: OddSpace
    source: TwistedBundle
    entries: Tuple[Tuple[Position, Tuple[PageEntry, ...]], ...]

    def as_dict(self) -> Dict[Position, Tuple[PageEntry, ...]]:
        return dict(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def positions(self) -> List[Position]:
        return [pq for pq, _ in self.entries]

    def possible_differential(self) -> Optional[Tuple[Position, Position]]:
        return possible_differential([(-p, q) for p, q in self.positions()])

    def nonpositive(self) -> bool:
        """Whether every entry has total degree q − p ≤ 0."""
        return all(q <= p for p, q in self.positions())

    def abutment(self) -> GradedDim:
        total: Dict[int, int] = collections.Counter()
        for (p, q), cell in self.entries:
            total[q - p] += sum(e.dimension for e in cell)
        return GradedDim.of(total)

    def euler(self) -> int:
        return self.abutment().euler()

    def rows(self) -> List[dict]:
        return [
            {"p": p, "q": q, "rep": list(e.rep.entries), "mult": e.mult}
            for (p, q), cell in self.entries
            for e in cell
        ]

    def __str__(self) -> str:
        if not self.entries:
            return f"E1({self.source}) = 0"
        cells = ", ".join(
            f"(-{p},{q}): " + " + ".join(f"{e.mult}x{e.rep.text()}" for e in cell)
            for (p, q), cell in self.entries
        )
        return f"E1({self.source}) = {cells}"


def possible_differential(positions: Sequence[Position]) -> Optional[Tuple[Position, Position]]:
    """A pair (source, target) joined by some d_r, r ≥ 1, if one exists.

    Positions are (column, row). d_r maps (c, q) to (c+r, q−r+1), so it
    raises the column and the total degree c+q by one.

    >>> possible_differential([(-1, 5)]) is None
    True
    >>> possible_differential([(-2, 3), (0, 2)])
    ((-2, 3), (0, 2))
    >>> possible_differential([(-2, 3), (0, 4)]) is None
    True
    """
    occupied = sorted(set(positions))
    for source in occupied:
        for target in occupied:
            r = target[0] - source[0]
            if r >= 1 and target[1] == source[1] - r + 1:
                return source, target
    return None


class Verdict(enum.Enum):
    ACYCLIC = "acyclic"
    EXACT = "exact"
    INDETERMINATE = "indeterminate"


@dataclasses.dataclass(frozen=True)
class CohomologyVerdict:
    kind: Verdict
    dims: GradedDim = GradedDim()
    euler: int = 0
    labels: Tuple[Tuple[int, SpWeight, int], ...] = ()
    evidence: Tuple[E1Page, ...] = ()

    @staticmethod
    def acyclic() -> CohomologyVerdict:
        return CohomologyVerdict(Verdict.ACYCLIC)

    @staticmethod
    def exact(dims: GradedDim, labels: Iterable[Tuple[int, SpWeight, int]] = ()) -> CohomologyVerdict:
        if dims.is_zero:
            return CohomologyVerdict.acyclic()
        return CohomologyVerdict(Verdict.EXACT, dims, dims.euler(), tuple(labels))

    @staticmethod
    def indeterminate(euler: int, evidence: Iterable[E1Page] = ()) -> CohomologyVerdict:
        return CohomologyVerdict(Verdict.INDETERMINATE, euler=euler, evidence=tuple(evidence))

    @staticmethod
    def from_result(result: CohomologyResult) -> CohomologyVerdict:
        if result.is_zero:
            return CohomologyVerdict.acyclic()
        return CohomologyVerdict.exact(
            GradedDim.concentrated(result.degree, result.dimension),
            [(result.degree, result.rep, 1)],
        )

    @property
    def determinate(self) -> bool:
        return self.kind is not Verdict.INDETERMINATE

    @property
    def is_zero(self) -> bool:
        return self.kind is Verdict.ACYCLIC

    def to_json(self) -> dict:
        out = {"verdict": self.kind.value, "euler": self.euler}
        if self.determinate:
            out["dims"] = self.dims.to_json()
            out["labels"] = [
                {"degree": d, "rep": list(rep.entries), "mult": m} for d, rep, m in self.labels
            ]
        else:
            out["pages"] = [
                {"source": page.source.text(), "rows": page.rows()} for page in self.evidence
            ]
        return out

    def __str__(self) -> str:
        if self.kind is Verdict.INDETERMINATE:
            return f"indeterminate (euler {self.euler})"
        return str(self.dims)


def direct_sum(parts: Iterable[Tuple[CohomologyVerdict, int]]) -> CohomologyVerdict:
    """Cohomology of ⊕ mult·summand from the summands' verdicts."""
    dims = GradedDim()
    euler = 0
    labels: List[Tuple[int, SpWeight, int]] = []
    evidence: List[E1Page] = []
    undecided = False
    for verdict, mult in parts:
        euler += mult * verdict.euler
        if not verdict.determinate:
            undecided = True
            evidence.extend(verdict.evidence)
            continue
        dims = dims + verdict.dims.scale(mult)
        labels.extend((d, rep, m * mult) for d, rep, m in verdict.labels)
    if undecided:
        return CohomologyVerdict.indeterminate(euler, evidence)
    return CohomologyVerdict.exact(dims, labels)


def wedge_sub(k: int, p: int) -> GLWeight:
    """Weight of ∧^p Ũ: (0^{k−p}, (−1)^p)."""
    return GLWeight((0,) * (k - p) + (-1,) * p)


@functools.lru_cache(maxsize=None)
def _koszul_entries(space: OddSpace, lam: GLWeight) -> Tuple[Tuple[Position, Tuple[PageEntry, ...]], ...]:
    ambient = space.ambient
    cells: Dict[Position, List[PageEntry]] = collections.defaultdict(list)
    for p in range(space.k + 1):
        for gamma, mult in lr(lam, wedge_sub(space.k, p)):
            result = bbw_even(ambient, TwistedBundle(gamma))
            if result.is_zero:
                continue
            cells[(p, result.degree)].append(PageEntry(result.rep, mult, gamma))
    return tuple((pq, tuple(cells[pq])) for pq in sorted(cells))


def koszul_page(space: OddSpace, b: TwistedBundle) -> E1Page:
    if b.k != space.k:
        raise RankMismatch(f"rank {b.k} bundle on {space}")
    return E1Page(space, b, _koszul_entries(space, b.absorbed))


def cohomology_odd(space: OddSpace, b: TwistedBundle) -> CohomologyVerdict:
    page = koszul_page(space, b)
    if page.is_empty:
        return CohomologyVerdict.acyclic()
    pair = page.possible_differential()
    if pair is not None and page.nonpositive():
        # H^j(X) = 0 for j < 0, so everything left sits in degree 0.
        euler = page.euler()
        if euler >= 0:
            logger.debug("{}: page in total degree <= 0, H^0 has dimension {}", b, euler)
            return CohomologyVerdict.exact(GradedDim.concentrated(0, euler))
        logger.warning("{}: page in total degree <= 0 with euler {}", b, euler)
    if pair is not None:
        logger.debug("{}: differential possible between {} and {}", b, *pair)
        return CohomologyVerdict.indeterminate(page.euler(), [page])
    labels = [
        (q - p, entry.rep, entry.mult) for (p, q), cell in page.entries for entry in cell
    ]
    return CohomologyVerdict.exact(page.abutment(), labels)


def cohomology(space: Space, b: TwistedBundle) -> CohomologyVerdict:
    if isinstance(space, EvenSpace):
        return CohomologyVerdict.from_result(bbw_even(space, b))
    return cohomology_odd(space, b)


def euler_characteristic(space: Space, b: TwistedBundle) -> int:
    """χ(U^λ); on the odd space this never needs the differentials."""
    if isinstance(space, EvenSpace):
        result = bbw_even(space, b)
        return sign(result.degree) * result.dimension
    return koszul_page(space, b).euler()


def tensor_cohomology(space: Space, first: TwistedBundle, second: TwistedBundle) -> CohomologyVerdict:
    """H•(first ⊗ second)."""
    decomposition = lr(first.absorbed, second.absorbed)
    return direct_sum((cohomology(space, TwistedBundle(g)), m) for g, m in decomposition)


def vanish_odd(space: OddSpace, lam: GLWeight) -> bool:
    """Sufficient condition for U^λ to be acyclic on IGr(k, 2n+1)."""
    if lam.k != space.k:
        raise RankMismatch(f"rank {lam.k} weight on {space}")
    n, k = space.n, space.k
    return (
        lam[-1] < 0
        and lam[0] >= -2 * n + k - 1
        and all(g <= 2 * (n + 1 - k) for g in lam.gaps())
    )


# Lower bound on λ₁ for the branch valid across twists 0..6.
_TWIST_BRANCH_BOUND = {OddSpace(3, 4): 0, EvenSpace(3, 5): -1}
_TWIST_BRANCH_RANGE = range(0, 7)


def vanish_specialized(space: Union[OddSpace, EvenSpace], lam: GLWeight, l: int) -> bool:
    """Whether U^λ(−l) is covered by the vanishing results for IGr(3,9) and IGr(3,10).

    The first branch is the plain criterion applied to λ−(l,l,l). The
    second keeps the gap and sign conditions on λ itself, replaces the
    bound on λ₁ by a stronger one, and then holds for every l in 0..6.
    """
    if space not in _TWIST_BRANCH_BOUND:
        raise PreconditionError(f"no specialized vanishing statement for {space}")
    plain = vanish_odd if isinstance(space, OddSpace) else vanish_even
    if plain(space, lam.shift(-l)):
        return True
    if isinstance(space, OddSpace):
        max_gap = 2 * (space.n + 1 - space.k)
    else:
        max_gap = 2 * (space.n + 1 - space.k) - 1
    return (
        l in _TWIST_BRANCH_RANGE
        and lam[-1] < 0
        and lam[0] >= _TWIST_BRANCH_BOUND[space]
        and all(g <= max_gap for g in lam.gaps())
    )
