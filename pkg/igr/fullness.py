"""Closure engine proving that a Lefschetz collection generates.

Bundles are monomials U^{i,0,−j}(l). Starting from a seed, two rules add
bundles to the subcategory D generated so far:

- the staircase rule: if the whole set S^{a,c}_b(l) lies in D then so do
  U^{a+1,−b}(l) (when c ≥ 0) and U^{b,−c−1}(l−b−1) (when a ≥ 0);
- the symplectic rule: U^{i,−j}(l) lies in D once every other U^{i′,−j′}(l)
  with i′+j′ ≤ i+j does, provided i+j > n+1−k.

The collection is full when every U^{i,−j}(l) with i+j ≤ 2n−2 is reached
for all twists l = 0..2n−2.
"""
from __future__ import annotations

import dataclasses
import enum
import json
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from loguru import logger

import igr.diagram as diagram
import igr.parse as parse
from igr.collection import CollectionSpec
from igr.diagram import DiagramConfig
from igr.errors import PreconditionError
from igr.svg import SVGGraphic
from igr.weights import TwistedBundle


@dataclasses.dataclass(frozen=True, order=True)
class Monomial:
    """U^{i,0,−j}(l)."""

    i: int
    j: int
    l: int = 0

    def bundle(self) -> TwistedBundle:
        return TwistedBundle.of(self.i, 0, -self.j, t=self.l if self.l else None)

    def dual(self) -> Monomial:
        """
        >>> Monomial(2, 1, 3).dual()
        Monomial(i=1, j=2, l=-3)
        """
        return Monomial(self.j, self.i, -self.l)

    def twisted(self, l: int) -> Monomial:
        return Monomial(self.i, self.j, self.l + l)

    @property
    def p(self) -> int:
        return self.i + self.j

    @staticmethod
    def from_bundle(b: TwistedBundle) -> Monomial:
        shown = b.normalized()
        i, middle, j = shown.weight.entries
        if middle != 0 or j > 0:
            raise PreconditionError(f"{b} is not of the form U[i,0,-j](l)")
        return Monomial(i, -j, shown.t)

    def to_json(self) -> List[int]:
        return [self.i, self.j, self.l]

    def text(self) -> str:
        return f"U^{{{self.i},{-self.j}}}({self.l})"

    def __str__(self) -> str:
        return self.text()


def universe_T(n: int, twists: Iterable[int] = (0,)) -> FrozenSet[Monomial]:
    """All U^{i,−j}(l) with i+j ≤ 2n−2 over the given twists."""
    if n < 2:
        raise PreconditionError(f"the universe needs n >= 2, got {n}")
    return frozenset(
        Monomial(i, j, l)
        for l in twists
        for i in range(2 * n - 1)
        for j in range(2 * n - 1 - i)
    )


def set_P(b: int, n: int, l: int = 0) -> FrozenSet[Monomial]:
    """P_b(l) = {U^{i,−b}(l)}."""
    return frozenset(Monomial(i, b, l) for i in range(2 * n - 1 - b))


def set_N(a: int, n: int, l: int = 0) -> FrozenSet[Monomial]:
    """N_a(l) = {U^{a,−i}(l)}."""
    return frozenset(Monomial(a, i, l) for i in range(2 * n - 1 - a))


@dataclasses.dataclass(frozen=True)
class SSet:
    a: int
    c: int
    b: int
    l: int
    members: Tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def text(self) -> str:
        return f"S^{{{self.a},{self.c}}}_{self.b}({self.l})"


def s_set(a: int, c: int, b: int, l: int = 0, n: Optional[int] = None) -> SSet:
    """S^{a,c}_b(l): the a+b+c+2 bundles

    U^{i,−b}(l) for 0 ≤ i ≤ a, U^{i,−(b−1−i)}(l−i−1) for 0 ≤ i < b and
    U^{b,−i}(l−b−1) for 0 ≤ i ≤ c.

    >>> len(s_set(3, 2, 0, n=4))
    7
    """
    if a < -1 or c < -1 or b < 0:
        raise PreconditionError(f"S-set needs a, c >= -1 and b >= 0, got a={a} b={b} c={c}")
    if n is not None and a + b + c != 2 * n - 3:
        raise PreconditionError(f"S-set on n={n} needs a+b+c = {2 * n - 3}, got {a + b + c}")
    members = (
        [Monomial(i, b, l) for i in range(a + 1)]
        + [Monomial(i, b - 1 - i, l - i - 1) for i in range(b)]
        + [Monomial(b, i, l - b - 1) for i in range(c + 1)]
    )
    return SSet(a, c, b, l, tuple(members))


def dual_s_set(s: SSet) -> SSet:
    """The members' duals, which form S^{c,a}_b(b+1−l)."""
    return SSet(s.c, s.a, s.b, s.b + 1 - s.l, tuple(m.dual() for m in s.members))


class Rule(enum.Enum):
    SEED = "Seed"
    STAIRCASE = "Staircase"
    CHAIN = "Chain"
    SYMPLECTIC = "Symplectic"


@dataclasses.dataclass(frozen=True)
class StepRecord:
    rule: Rule
    premises: Tuple[Monomial, ...]
    additions: Tuple[Monomial, ...]
    params: Tuple[Tuple[str, int], ...] = ()

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "params": dict(self.params),
            "premises": [m.to_json() for m in self.premises],
            "additions": [m.to_json() for m in self.additions],
        }

    @staticmethod
    def from_json(data: dict) -> StepRecord:
        return StepRecord(
            Rule(data["rule"]),
            tuple(Monomial(*m) for m in data["premises"]),
            tuple(Monomial(*m) for m in data["additions"]),
            tuple(sorted(data.get("params", {}).items())),
        )


@dataclasses.dataclass
class ClosureState:
    n: int
    window: range
    seed: FrozenSet[Monomial]
    present: Set[Monomial]
    log: List[StepRecord]
    k: int = 3

    @staticmethod
    def start(seed: Iterable[Monomial], n: int, window: Optional[range] = None, k: int = 3) -> ClosureState:
        if window is None:
            window = default_window(n)
        seed = frozenset(seed)
        return ClosureState(n, window, seed, set(seed), [], k)

    def __contains__(self, m: Monomial) -> bool:
        return m in self.present

    def __len__(self) -> int:
        return len(self.present)

    def in_window(self, m: Monomial) -> bool:
        return m.l in self.window

    def missing(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        return sorted(m for m in monomials if m not in self.present)

    def record(self, record: StepRecord) -> None:
        new = [m for m in record.additions if m not in self.present]
        assert new, f"{record.rule.value} step adds nothing"
        assert not self.missing(record.premises), "premises must be present"
        self.present.update(new)
        self.log.append(record)

    def serialize_log(self, out) -> None:
        """One JSON object per line: the seed, then every step."""
        seed = StepRecord(Rule.SEED, (), tuple(sorted(self.seed)))
        for record in [seed] + self.log:
            print(json.dumps(record.to_json(), sort_keys=True), file=out)

    def serialize_log_to_string(self) -> str:
        return parse.serialize_to_string_impl(self.serialize_log)

    def visualize_as_svg(self, config: DiagramConfig = DiagramConfig()) -> SVGGraphic:
        return diagram.render_svg(coverage(self), self.n, self.window, config)

    def visualize_as_text(self, config: DiagramConfig = DiagramConfig()) -> str:
        return diagram.render_ascii(coverage(self), self.n, config)


def default_window(n: int) -> range:
    return range(0, 2 * n - 1)


def parse_log(lines: Iterable[str]) -> Tuple[FrozenSet[Monomial], List[StepRecord]]:
    records = [StepRecord.from_json(json.loads(line)) for line in parse.remove_comments(lines)]
    assert records and records[0].rule is Rule.SEED, "a log starts with its seed"
    return frozenset(records[0].additions), records[1:]


def seed_from_collection(collection: CollectionSpec, twists: Iterable[int]) -> FrozenSet[Monomial]:
    base = [Monomial.from_bundle(b) for b in collection.members]
    return frozenset(m.twisted(l) for l in twists for m in base)


def _s_params(a: int, b: int, c: int, l: int) -> Tuple[Tuple[str, int], ...]:
    return (("a", a), ("b", b), ("c", c), ("l", l))


def _staircase_targets(a: int, b: int, c: int, l: int) -> List[Monomial]:
    targets = []
    if c >= 0:
        targets.append(Monomial(a + 1, b, l))
    if a >= 0:
        targets.append(Monomial(b, c + 1, l - b - 1))
    return targets


def _s_set_ready(state: ClosureState, s: SSet) -> bool:
    return all(state.in_window(m) and m in state for m in s)


def rule_staircase(state: ClosureState, a: int, b: int, c: int, l: int) -> List[Monomial]:
    """Apply the staircase rule to S^{a,c}_b(l); returns what was added."""
    s = s_set(a, c, b, l, state.n)
    if b > 2 * state.n - 2:
        raise PreconditionError(f"b={b} exceeds {2 * state.n - 2}")
    if not _s_set_ready(state, s):
        logger.debug("{} not in D yet; missing {}", s.text(), state.missing(s))
        return []
    additions = [
        m for m in _staircase_targets(a, b, c, l) if state.in_window(m) and m not in state
    ]
    if additions:
        state.record(StepRecord(Rule.STAIRCASE, s.members, tuple(additions), _s_params(a, b, c, l)))
    return additions


def _find_s_set(state: ClosureState, b: int, l: int) -> Optional[int]:
    for a in range(-1, 2 * state.n - 1 - b):
        c = 2 * state.n - 3 - a - b
        if c >= -1 and _s_set_ready(state, s_set(a, c, b, l, state.n)):
            return a
    return None


def rule_chain(state: ClosureState, b: int, l: int, a: Optional[int] = None) -> List[Monomial]:
    """From one S^{a,c}_b(l) in D, generate P_b(l) and N_b(l−b−1).

    Runs the staircase rule upwards in a and downwards in a on a scratch
    copy, then logs the result as a single step.
    """
    n = state.n
    if a is None:
        a = _find_s_set(state, b, l)
        if a is None:
            logger.debug("no S-set with b={} at twist {} is in D", b, l)
            return []
    c = 2 * n - 3 - a - b
    start = s_set(a, c, b, l, n)
    if not _s_set_ready(state, start):
        logger.debug("{} not in D yet; missing {}", start.text(), state.missing(start))
        return []

    scratch = ClosureState(n, state.window, state.seed, set(state.present), [], state.k)
    for up in range(a, 2 * n - 2 - b):
        rule_staircase(scratch, up, b, 2 * n - 3 - up - b, l)
    for down in range(a, -1, -1):
        rule_staircase(scratch, down, b, 2 * n - 3 - down - b, l)

    additions = tuple(sorted(scratch.present - state.present))
    if additions:
        state.record(StepRecord(Rule.CHAIN, start.members, additions, _s_params(a, b, c, l)))
    return list(additions)


def symplectic_premises(i: int, j: int, l: int) -> List[Monomial]:
    p = i + j
    return [
        Monomial(x, q - x, l)
        for q in range(p + 1)
        for x in range(q + 1)
        if (x, q - x) != (i, j)
    ]


def rule_symplectic(state: ClosureState, i: int, j: int, l: int) -> List[Monomial]:
    """Add U^{i,−j}(l) once everything of total degree ≤ i+j around it is in D."""
    p = i + j
    bound = state.n + 1 - state.k
    if p <= bound:
        raise PreconditionError(f"symplectic rule needs i+j > {bound}, got {p}")
    if p > 2 * state.n - 2:
        raise PreconditionError(f"U^{{{i},-{j}}} lies outside the universe for n={state.n}")
    target = Monomial(i, j, l)
    if target in state or not state.in_window(target):
        return []
    premises = symplectic_premises(i, j, l)
    missing = state.missing(premises)
    if missing:
        logger.debug("{} blocked by {}", target, missing)
        return []
    state.record(StepRecord(Rule.SYMPLECTIC, tuple(premises), (target,), (("i", i), ("j", j), ("l", l))))
    return [target]


def _staircase_sweep(state: ClosureState) -> int:
    n = state.n
    added = 0
    for b in range(2 * n - 1):
        for l in state.window:
            for a in range(-1, 2 * n - 1 - b):
                c = 2 * n - 3 - a - b
                if c < -1:
                    continue
                added += len(rule_staircase(state, a, b, c, l))
    return added


def _symplectic_sweep(state: ClosureState) -> int:
    n = state.n
    added = 0
    for p in range(n + 2 - state.k, 2 * n - 1):
        for l in state.window:
            for i in range(p + 1):
                added += len(rule_symplectic(state, i, p - i, l))
    return added


def saturate(
    seed: Iterable[Monomial], n: int, window: Optional[range] = None, k: int = 3
) -> ClosureState:
    """Apply both rules until nothing changes.

    Each pass sweeps the staircase rule by (b, l, a) and then the symplectic
    rule by (p, l, i). The fixpoint does not depend on this order; the log does.
    """
    state = ClosureState.start(seed, n, window, k)
    passes = 0
    while True:
        passes += 1
        added = _staircase_sweep(state) + _symplectic_sweep(state)
        logger.debug("saturation pass {}: {} new bundles", passes, added)
        if not added:
            break
    logger.info(
        "saturated after {} passes: {} bundles, {} steps", passes, len(state), len(state.log)
    )
    return state


def final_check(state: ClosureState, n: Optional[int] = None) -> bool:
    """Whether T(l) ⊆ D for every l = 0..2n−2."""
    n = state.n if n is None else n
    return universe_T(n, default_window(n)) <= state.present


@dataclasses.dataclass(frozen=True)
class ScriptedStep:
    """S-sets as (a, c, b, l) and symplectic additions as (i, j, l)."""

    number: int
    s_sets: Tuple[Tuple[int, int, int, int], ...]
    symplectic: Tuple[Tuple[int, int, int], ...]


def _range_s(a: int, c: int, b: int, twists: Iterable[int]) -> Tuple[Tuple[int, int, int, int], ...]:
    return tuple((a, c, b, l) for l in twists)


def _range_sym(i: int, j: int, twists: Iterable[int]) -> Tuple[Tuple[int, int, int], ...]:
    return tuple((i, j, l) for l in twists)


# The nine-step schedule on IGr(3,9), starting from (B1 ∪ B2)(l), l = 0..6.
PAPER_STEPS: Tuple[ScriptedStep, ...] = (
    ScriptedStep(1, _range_s(3, 2, 0, range(1, 7)), _range_sym(1, 2, range(0, 6))),
    ScriptedStep(2, _range_s(2, 2, 1, range(2, 7)), _range_sym(2, 2, range(2, 5))),
    ScriptedStep(
        3,
        ((1, 2, 2, 5), (2, 1, 2, 3), (2, 1, 2, 4)),
        ((3, 1, 1), (1, 3, 5), (3, 2, 2), (2, 3, 3), (2, 3, 4)),
    ),
    ScriptedStep(4, ((2, 0, 3, 4), (1, 1, 3, 5)), ((4, 0, 0), (4, 1, 1), (1, 4, 5), (2, 4, 4))),
    ScriptedStep(5, ((1, 0, 4, 5),), ((5, 0, 0), (1, 5, 5))),
    ScriptedStep(6, ((0, 3, 2, 6),), ((0, 3, 6), (3, 3, 3))),
    ScriptedStep(7, ((0, 2, 3, 6),), ((0, 4, 6), (4, 2, 2))),
    ScriptedStep(8, ((0, 1, 4, 6),), ((0, 5, 6), (5, 1, 1))),
    ScriptedStep(9, ((0, 0, 5, 6),), ((6, 0, 0), (0, 6, 6))),
)


@dataclasses.dataclass
class StepOutcome:
    number: int
    added: int
    problems: List[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {"step": self.number, "added": self.added, "ok": self.ok, "problems": self.problems}


@dataclasses.dataclass
class ReplayReport:
    state: ClosureState
    steps: List[StepOutcome]
    full: bool

    @property
    def ok(self) -> bool:
        return self.full and all(s.ok for s in self.steps)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "full": self.full,
            "bundles": len(self.state),
            "steps": [s.to_json() for s in self.steps],
        }

    def serialize(self, out) -> None:
        for step in self.steps:
            status = "ok" if step.ok else "FAILED"
            print(f"step {step.number}: {status}, {step.added} new bundles", file=out)
            for problem in step.problems:
                print(f"  {problem}", file=out)
        print(f"{len(self.state)} bundles in D; full: {self.full}", file=out)


def _run_scripted_step(state: ClosureState, step: ScriptedStep) -> StepOutcome:
    before = len(state)
    problems = []
    for a, c, b, l in step.s_sets:
        s = s_set(a, c, b, l, state.n)
        missing = state.missing(s)
        if missing:
            problems.append(f"{s.text()} not in D: missing {', '.join(map(str, missing))}")
            continue
        if not rule_chain(state, b, l, a):
            problems.append(f"{s.text()} generated nothing new")
        expected = set_P(b, state.n, l) | {m for m in set_N(b, state.n, l - b - 1) if state.in_window(m)}
        missing = state.missing(expected)
        if missing:
            problems.append(f"{s.text()} left {', '.join(map(str, missing))} out")
    for i, j, l in step.symplectic:
        target = Monomial(i, j, l)
        if target in state:
            problems.append(f"{target} was already in D")
        elif not rule_symplectic(state, i, j, l):
            problems.append(f"{target} could not be generated")
    outcome = StepOutcome(step.number, len(state) - before, problems)
    if outcome.ok:
        logger.info("step {}: {} new bundles", step.number, outcome.added)
    else:
        logger.warning("step {}: {}", step.number, "; ".join(problems))
    return outcome


def replay_paper_steps(
    n: int = 4, steps: Sequence[ScriptedStep] = PAPER_STEPS, seed: Optional[Iterable[Monomial]] = None
) -> ReplayReport:
    """Run a scripted schedule, checking every premise and every claimed addition."""
    if seed is None:
        seed = seed_from_collection(CollectionSpec.B1B2, default_window(n))
    state = ClosureState.start(seed, n)
    outcomes = [_run_scripted_step(state, step) for step in steps]
    return ReplayReport(state, outcomes, final_check(state))


def _replay_record(state: ClosureState, record: StepRecord) -> List[Monomial]:
    if record.rule is Rule.SYMPLECTIC:
        return rule_symplectic(state, record.param("i"), record.param("j"), record.param("l"))
    a, b, c, l = (record.param(x) for x in "abcl")
    if record.rule is Rule.STAIRCASE:
        return rule_staircase(state, a, b, c, l)
    if record.rule is Rule.CHAIN:
        return rule_chain(state, b, l, a)
    raise ValueError(f"cannot replay a {record.rule.value} record")


def audit(
    log: Sequence[StepRecord], seed: Iterable[Monomial], n: int, window: Optional[range] = None
) -> Tuple[bool, Optional[ClosureState]]:
    """Re-derive every record of a log from the seed.

    Returns (True, state) when every record re-derives exactly its additions.
    """
    state = ClosureState.start(seed, n, window)
    for number, record in enumerate(log):
        if state.missing(record.premises):
            logger.warning("record {}: premises {} absent", number, state.missing(record.premises))
            return False, None
        additions = _replay_record(state, record)
        if sorted(additions) != sorted(record.additions):
            logger.warning("record {}: expected {}, re-derived {}", number, list(record.additions), additions)
            return False, None
    return True, state


def coverage(state: ClosureState) -> Dict[Tuple[int, int], List[int]]:
    """(i, j) → sorted twists at which U^{i,−j} is in D."""
    out: Dict[Tuple[int, int], List[int]] = {}
    for m in sorted(state.present, key=lambda m: (m.i, m.j, m.l)):
        out.setdefault((m.i, m.j), []).append(m.l)
    return out
