import io
import json
import unittest

from igr.collection import CollectionSpec
from igr.errors import PreconditionError
from igr.fullness import (
    PAPER_STEPS,
    ClosureState,
    Monomial,
    Rule,
    ScriptedStep,
    StepRecord,
    audit,
    coverage,
    default_window,
    dual_s_set,
    final_check,
    parse_log,
    replay_paper_steps,
    rule_chain,
    rule_staircase,
    rule_symplectic,
    s_set,
    saturate,
    seed_from_collection,
    set_N,
    set_P,
    symplectic_premises,
    universe_T,
)
from igr.weights import TwistedBundle

N = 4
WINDOW = default_window(N)


def paper_seed():
    return seed_from_collection(CollectionSpec.B1B2, WINDOW)


class TestMonomials(unittest.TestCase):
    def test_bundle(self):
        self.assertEqual(TwistedBundle.of(2, 0, -1, t=3), Monomial(2, 1, 3).bundle())
        self.assertEqual("U[2,0,-1]", Monomial(2, 1).bundle().text())

    def test_from_bundle(self):
        self.assertEqual(Monomial(2, 1, 0), Monomial.from_bundle(TwistedBundle.of(2, 0, -1)))
        self.assertEqual(Monomial(1, 1, 2), Monomial.from_bundle(TwistedBundle.of(3, 2, 1)))

    def test_text(self):
        self.assertEqual("U^{2,-1}(3)", Monomial(2, 1, 3).text())

    def test_universe(self):
        self.assertEqual(28, len(universe_T(4)))
        self.assertEqual(6, len(universe_T(2)))
        self.assertEqual(196, len(universe_T(4, WINDOW)))

    def test_universe_needs_n(self):
        with self.assertRaises(PreconditionError):
            universe_T(1)

    def test_rows_and_columns_partition_the_universe(self):
        for l in (0, 3):
            rows = [set_P(b, N, l) for b in range(2 * N - 1)]
            columns = [set_N(a, N, l) for a in range(2 * N - 1)]
            for parts in (rows, columns):
                self.assertEqual(28, sum(len(p) for p in parts))
                self.assertEqual(universe_T(N, [l]), frozenset().union(*parts))

    def test_seed(self):
        seed = paper_seed()
        self.assertEqual(8 * 7, len(seed))
        self.assertIn(Monomial(3, 0, 6), seed)
        self.assertIn(Monomial(0, 2, 0), seed)


class TestSSets(unittest.TestCase):
    def test_size(self):
        for a in range(-1, 2 * N - 1):
            for b in range(2 * N - 1):
                c = 2 * N - 3 - a - b
                if c < -1:
                    continue
                s = s_set(a, c, b, 0, N)
                self.assertEqual(2 * N - 1, len(s), (a, b, c))
                self.assertEqual(len(set(s)), len(s), (a, b, c))

    def test_members(self):
        s = s_set(2, 1, 1, 2)
        want = [
            Monomial(0, 1, 2),
            Monomial(1, 1, 2),
            Monomial(2, 1, 2),
            Monomial(0, 0, 1),
            Monomial(1, 0, 0),
            Monomial(1, 1, 0),
        ]
        self.assertEqual(want, list(s))

    def test_dual(self):
        for a in range(-1, 2 * N - 1):
            for b in range(2 * N - 1):
                c = 2 * N - 3 - a - b
                if c < -1:
                    continue
                for l in range(-2, 5):
                    flipped = dual_s_set(s_set(a, c, b, l, N))
                    want = s_set(c, a, b, b + 1 - l, N)
                    self.assertEqual(set(want), set(flipped), (a, b, c, l))
                    self.assertEqual((want.a, want.c, want.l), (flipped.a, flipped.c, flipped.l))

    def test_bad_sum(self):
        with self.assertRaises(PreconditionError):
            s_set(1, 1, 1, 0, N)

    def test_bad_parameters(self):
        with self.assertRaises(PreconditionError):
            s_set(-2, 6, 1)


class TestRules(unittest.TestCase):
    def test_staircase_rule(self):
        state = ClosureState.start(paper_seed(), N)
        added = rule_staircase(state, 3, 0, 2, 1)
        self.assertEqual([Monomial(4, 0, 1), Monomial(0, 3, 0)], added)
        self.assertEqual(Rule.STAIRCASE, state.log[-1].rule)
        self.assertEqual(3, state.log[-1].param("a"))

    def test_staircase_rule_needs_the_whole_set(self):
        state = ClosureState.start(paper_seed(), N)
        self.assertEqual([], rule_staircase(state, 4, 0, 1, 1))
        self.assertEqual([], state.log)

    def test_staircase_rule_respects_window(self):
        # The S-set reaches down to twist -1.
        state = ClosureState.start(paper_seed(), N)
        self.assertEqual([], rule_staircase(state, 3, 0, 2, 0))
        self.assertNotIn(Monomial(0, 3, -1), state)

    def test_chain(self):
        state = ClosureState.start(paper_seed(), N)
        added = rule_chain(state, 0, 1)
        self.assertEqual(1, len(state.log))
        self.assertEqual(Rule.CHAIN, state.log[0].rule)
        self.assertTrue(set_P(0, N, 1) <= state.present)
        self.assertTrue(set_N(0, N, 0) <= state.present)
        self.assertEqual(7, len(added))

    def test_chain_without_s_set(self):
        state = ClosureState.start(paper_seed(), N)
        self.assertEqual([], rule_chain(state, 4, 3))

    def test_symplectic_premises(self):
        premises = symplectic_premises(1, 2, 0)
        self.assertEqual(9, len(premises))
        self.assertNotIn(Monomial(1, 2, 0), premises)

    def test_symplectic_rule(self):
        state = ClosureState.start(paper_seed(), N)
        self.assertEqual([], rule_symplectic(state, 1, 2, 0))
        rule_chain(state, 0, 1)
        self.assertEqual([Monomial(1, 2, 0)], rule_symplectic(state, 1, 2, 0))
        self.assertEqual(Rule.SYMPLECTIC, state.log[-1].rule)

    def test_symplectic_bound(self):
        state = ClosureState.start(paper_seed(), N)
        with self.assertRaises(PreconditionError):
            rule_symplectic(state, 1, 1, 0)
        with self.assertRaises(PreconditionError):
            rule_symplectic(state, 4, 3, 0)

    def test_record_requires_something_new(self):
        state = ClosureState.start(paper_seed(), N)
        with self.assertRaises(AssertionError):
            state.record(StepRecord(Rule.STAIRCASE, (), (Monomial(0, 0, 0),)))


class TestReplay(unittest.TestCase):
    def test_nine_steps(self):
        self.assertEqual(list(range(1, 10)), [s.number for s in PAPER_STEPS])

    def test_paper_schedule(self):
        report = replay_paper_steps()
        for step in report.steps:
            self.assertTrue(step.ok, (step.number, step.problems))
            self.assertGreater(step.added, 0, step.number)
        self.assertTrue(report.full)
        self.assertTrue(report.ok)
        self.assertEqual(196, len(report.state))

    def test_replay_log_audits(self):
        report = replay_paper_steps()
        ok, state = audit(report.state.log, paper_seed(), N)
        self.assertTrue(ok)
        self.assertEqual(report.state.present, state.present)

    def test_broken_schedule(self):
        # Step 2 needs the bundles that step 1 produces.
        report = replay_paper_steps(steps=PAPER_STEPS[1:2])
        self.assertFalse(report.ok)
        self.assertFalse(report.steps[0].ok)

    def test_claimed_addition_already_present(self):
        step = ScriptedStep(1, (), ((2, 1, 0),))
        report = replay_paper_steps(steps=[step])
        self.assertEqual(["U^{2,-1}(0) was already in D"], report.steps[0].problems)

    def test_json(self):
        data = replay_paper_steps().to_json()
        self.assertTrue(data["ok"])
        self.assertEqual(9, len(data["steps"]))

    def test_serialize(self):
        sio = io.StringIO()
        replay_paper_steps().serialize(sio)
        lines = sio.getvalue().splitlines()
        self.assertTrue(lines[0].startswith("step 1: ok"))
        self.assertEqual("196 bundles in D; full: True", lines[-1])


class TestSaturate(unittest.TestCase):
    def test_paper_seed(self):
        state = saturate(paper_seed(), N)
        self.assertEqual(196, len(state))
        self.assertTrue(final_check(state))

    def test_saturation_contains_scripted_steps(self):
        state = saturate(paper_seed(), N)
        replayed = replay_paper_steps().state
        self.assertTrue(replayed.present <= state.present)

    def test_full_seed_needs_no_steps(self):
        state = saturate(universe_T(N, WINDOW), N)
        self.assertEqual([], state.log)
        self.assertTrue(final_check(state))

    def test_empty_seed(self):
        state = saturate([], N)
        self.assertEqual(0, len(state))
        self.assertEqual([], state.log)
        self.assertFalse(final_check(state))

    def test_small_case(self):
        state = saturate(universe_T(2, default_window(2)), 2)
        self.assertTrue(final_check(state))
        self.assertEqual(18, len(state))

    def test_missing_member_is_not_full(self):
        seed = seed_from_collection(CollectionSpec.S, WINDOW)
        state = saturate(seed, N)
        self.assertFalse(final_check(state))

    def test_log_round_trip(self):
        state = saturate(paper_seed(), N)
        text = state.serialize_log_to_string()
        lines = text.splitlines()
        self.assertEqual("Seed", json.loads(lines[0])["rule"])
        seed, log = parse_log(lines)
        self.assertEqual(state.seed, seed)
        self.assertEqual(state.log, log)

    def test_audit(self):
        state = saturate(paper_seed(), N)
        ok, rebuilt = audit(state.log, state.seed, N)
        self.assertTrue(ok)
        self.assertEqual(state.present, rebuilt.present)

    def test_audit_rejects_tampered_log(self):
        state = saturate(paper_seed(), N)
        first = state.log[0]
        forged = StepRecord(first.rule, first.premises, first.additions + (Monomial(6, 0, 0),), first.params)
        ok, rebuilt = audit([forged] + state.log[1:], state.seed, N)
        self.assertFalse(ok)
        self.assertIsNone(rebuilt)

    def test_audit_rejects_missing_premises(self):
        state = saturate(paper_seed(), N)
        ok, _ = audit(state.log[1:], state.seed, N)
        self.assertFalse(ok)

    def test_coverage(self):
        state = saturate(paper_seed(), N)
        cover = coverage(state)
        self.assertEqual(28, len(cover))
        self.assertEqual(list(WINDOW), cover[(6, 0)])


if __name__ == "__main__":
    unittest.main()
