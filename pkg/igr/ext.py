"""Ext-groups between twisted Schur bundles and the collection checkers.

Ext•(U^α, U^β) = H•(U^{−α} ⊗ U^β), so every Ext computation is a
Littlewood–Richardson decomposition followed by one cohomology verdict per
summand.
"""
from __future__ import annotations

import dataclasses
import enum
import multiprocessing
from multiprocessing.pool import ThreadPool
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from igr.collection import CollectionSpec
from igr.errors import RankMismatch
from igr.oddcoh import CohomologyVerdict, GradedDim, Verdict, cohomology, direct_sum
from igr.schur import lr
from igr.spaces import OddSpace, Space
from igr.status import Status
from igr.weights import TwistedBundle, dual

T = TypeVar("T")
R = TypeVar("R")

ExtFunction = Callable[[object, object, Space], CohomologyVerdict]


def ext_groups(first: TwistedBundle, second: TwistedBundle, space: Space = OddSpace.IGR_3_9) -> CohomologyVerdict:
    """Ext•(first, second) on `space`."""
    if first.k != second.k:
        raise RankMismatch(f"Ext between rank {first.k} and rank {second.k} bundles")
    decomposition = lr(dual(first.absorbed), second.absorbed)
    return direct_sum((cohomology(space, TwistedBundle(g)), m) for g, m in decomposition)


def ext_euler(first: TwistedBundle, second: TwistedBundle, space: Space = OddSpace.IGR_3_9) -> int:
    return ext_groups(first, second, space).euler


def parallel_map(fn: Callable[[T], R], jobs: Sequence[T], threads: Optional[int] = 1) -> List[R]:
    """Order-preserving map over a thread pool; threads <= 1 runs inline."""
    if threads is None:
        threads = multiprocessing.cpu_count()
    if threads <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ThreadPool(threads) as pool:
        return pool.map(fn, jobs)


class Expect(enum.Enum):
    ZERO = "0"
    POINT = "C"

    def matches(self, verdict: CohomologyVerdict) -> bool:
        if self is Expect.ZERO:
            return verdict.kind is Verdict.ACYCLIC
        return verdict.dims == GradedDim.concentrated(0)


@dataclasses.dataclass(frozen=True)
class PairVerdict:
    """Ext•(left(twist), right) against what the criterion requires."""

    left_index: int
    right_index: int
    left: str
    right: str
    twist: int
    expect: Expect
    verdict: CohomologyVerdict

    @property
    def status(self) -> Status:
        if not self.verdict.determinate:
            return Status.INDETERMINATE
        return Status.PASS if self.expect.matches(self.verdict) else Status.FAIL

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "twist": self.twist,
            "expect": self.expect.value,
            "status": self.status.value,
            "result": self.verdict.to_json(),
        }

    def __str__(self) -> str:
        return (
            f"Ext({self.left}({self.twist}), {self.right}) = {self.verdict}"
            f"  [expect {self.expect.value}: {self.status.value}]"
        )


@dataclasses.dataclass
class CheckReport:
    name: str
    check: str
    space: str
    index: int
    pairs: List[PairVerdict]

    @property
    def status(self) -> Status:
        return Status.worst(p.status for p in self.pairs)

    @property
    def failures(self) -> List[PairVerdict]:
        return [p for p in self.pairs if p.status is Status.FAIL]

    @property
    def undecided(self) -> List[PairVerdict]:
        return [p for p in self.pairs if p.status is Status.INDETERMINATE]

    def to_json(self) -> dict:
        return {
            "collection": self.name,
            "check": self.check,
            "space": self.space,
            "index": self.index,
            "status": self.status.value,
            "pairs": [p.to_json() for p in self.pairs],
        }

    def serialize(self, out, verbose: bool = False) -> None:
        print(
            f"{self.check} {self.name} on {self.space} (index {self.index}): "
            f"{self.status.value} ({len(self.pairs)} pairs, "
            f"{len(self.failures)} failed, {len(self.undecided)} indeterminate)",
            file=out,
        )
        for pair in self.pairs:
            if verbose or pair.status is not Status.PASS:
                print(f"  {pair}", file=out)


def _label(member) -> str:
    return member.text()


def _run_pairs(
    name: str,
    check: str,
    members: Sequence,
    jobs: List[Tuple[int, int, int, Expect]],
    index: int,
    space: Space,
    threads: Optional[int],
    ext: ExtFunction,
) -> CheckReport:
    def run(job: Tuple[int, int, int, Expect]) -> PairVerdict:
        j, i, t, expect = job
        verdict = ext(members[j].twisted(t), members[i], space)
        return PairVerdict(j, i, _label(members[j]), _label(members[i]), t, expect, verdict)

    pairs = parallel_map(run, jobs, threads)
    report = CheckReport(name, check, str(space), index, pairs)
    log = logger.info if report.status is Status.PASS else logger.warning
    log(
        "{} {}: {} ({} pairs, {} failed, {} indeterminate)",
        check, name, report.status.value, len(pairs), len(report.failures), len(report.undecided),
    )
    return report


def check_lefschetz_basis(
    collection: CollectionSpec,
    w: int,
    space: Space = OddSpace.IGR_3_9,
    threads: Optional[int] = 1,
    ext: ExtFunction = ext_groups,
) -> CheckReport:
    """Exceptionality plus Ext•(E_j(t), E_i) = 0 for i ≤ j and 0 < t < w.

    Pairs are ordered by (j, i) and then by twist.
    """
    members = collection.members
    jobs = [
        (j, i, t, Expect.POINT if t == 0 and i == j else Expect.ZERO)
        for j in range(len(members))
        for i in range(j + 1)
        for t in range(w)
    ]
    return _run_pairs(collection.name, "lefschetz-basis", members, jobs, w, space, threads, ext)


def check_exceptional(
    collection: CollectionSpec,
    space: Space = OddSpace.IGR_3_9,
    threads: Optional[int] = 1,
    ext: ExtFunction = ext_groups,
) -> CheckReport:
    members = collection.members
    jobs = [
        (j, i, 0, Expect.POINT if i == j else Expect.ZERO)
        for j in range(len(members))
        for i in range(j + 1)
    ]
    return _run_pairs(collection.name, "exceptional", members, jobs, 1, space, threads, ext)


def check_block_semiorthogonality(
    generators: CollectionSpec,
    w: int,
    space: Space = OddSpace.IGR_3_9,
    threads: Optional[int] = 1,
    ext: ExtFunction = ext_groups,
) -> CheckReport:
    """Ext•(x(l), y) = 0 for every ordered pair of generators and 0 < l < w."""
    members = generators.members
    jobs = [
        (j, i, t, Expect.ZERO)
        for j in range(len(members))
        for i in range(len(members))
        for t in range(1, w)
    ]
    return _run_pairs(generators.name, "block-semiorthogonality", members, jobs, w, space, threads, ext)


def ext_over_twists(
    first: TwistedBundle,
    second: TwistedBundle,
    twists: Iterable[int],
    space: Space = OddSpace.IGR_3_9,
) -> List[Tuple[int, CohomologyVerdict]]:
    return [(t, ext_groups(first.twisted(t), second, space)) for t in twists]
