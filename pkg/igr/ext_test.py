import io
import itertools
import unittest

from igr.collection import CollectionSpec
from igr.errors import RankMismatch
from igr.ext import (
    Expect,
    check_block_semiorthogonality,
    check_exceptional,
    check_lefschetz_basis,
    ext_euler,
    ext_groups,
    ext_over_twists,
    parallel_map,
)
from igr.oddcoh import CohomologyVerdict, GradedDim
from igr.spaces import OddSpace
from igr.status import Status
from igr.weights import TwistedBundle

X = OddSpace.IGR_3_9


class TestExtGroups(unittest.TestCase):
    def test_self_ext_of_structure_sheaf(self):
        o = TwistedBundle.of(0, 0, 0)
        self.assertEqual(GradedDim.concentrated(0), ext_groups(o, o, X).dims)

    def test_extremal(self):
        results = dict(ext_over_twists(TwistedBundle.of(3, 0, 0), TwistedBundle.of(0, 0, -2), range(7), X))
        self.assertEqual(GradedDim.concentrated(4), results[0].dims)
        for t in range(1, 7):
            self.assertTrue(results[t].is_zero, t)

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatch):
            ext_groups(TwistedBundle.of(0, 0), TwistedBundle.of(0, 0, 0), X)

    def test_serre_duality(self):
        members = CollectionSpec.B1B2.members
        w = X.index
        for first, second in itertools.product(members, repeat=2):
            for t in range(w + 1):
                there = ext_groups(first.twisted(t), second, X)
                back = ext_groups(second, first.twisted(t - w), X)
                self.assertIsInstance(there.euler, int)
                self.assertEqual(there.euler, -back.euler, (first, second, t))
                if there.determinate and back.determinate:
                    flipped = GradedDim.of({X.dimension - q: d for q, d in back.dims.dims})
                    self.assertEqual(there.dims, flipped, (first, second, t))

    def test_canonical_twist(self):
        o = TwistedBundle.of(0, 0, 0)
        self.assertEqual(GradedDim.concentrated(15), ext_groups(o.twisted(X.index), o, X).dims)
        for l in range(1, X.index):
            self.assertTrue(ext_groups(o.twisted(l), o, X).is_zero, l)

    def test_euler(self):
        self.assertEqual(1, ext_euler(TwistedBundle.of(2, 0, -1), TwistedBundle.of(2, 0, -1), X))


class TestParallelMap(unittest.TestCase):
    def test_order_preserved(self):
        self.assertEqual([x * x for x in range(20)], parallel_map(lambda x: x * x, list(range(20)), 4))

    def test_inline(self):
        self.assertEqual([1], parallel_map(lambda x: x + 1, [0], None))


def fake_ext(verdict):
    def ext(first, second, space):
        if first == second:
            return CohomologyVerdict.exact(GradedDim.concentrated(0))
        return verdict

    return ext


class TestReportLogic(unittest.TestCase):
    collection = CollectionSpec.S1

    def test_pass(self):
        report = check_lefschetz_basis(self.collection, 1, X, ext=fake_ext(CohomologyVerdict.acyclic()))
        self.assertEqual(Status.PASS, report.status)
        self.assertEqual(6, len(report.pairs))

    def test_fail_outranks_indeterminate(self):
        def ext(first, second, space):
            if first == second:
                return CohomologyVerdict.indeterminate(1)
            return CohomologyVerdict.exact(GradedDim.concentrated(1))

        report = check_lefschetz_basis(self.collection, 1, X, ext=ext)
        self.assertEqual(Status.FAIL, report.status)
        self.assertEqual(2, report.status.exit_code)

    def test_indeterminate(self):
        report = check_exceptional(self.collection, X, ext=fake_ext(CohomologyVerdict.indeterminate(0)))
        self.assertEqual(Status.INDETERMINATE, report.status)
        self.assertEqual(3, len(report.undecided))
        self.assertEqual(3, report.status.exit_code)

    def test_expectations(self):
        self.assertTrue(Expect.POINT.matches(CohomologyVerdict.exact(GradedDim.concentrated(0))))
        self.assertFalse(Expect.POINT.matches(CohomologyVerdict.exact(GradedDim.concentrated(0, 2))))
        self.assertTrue(Expect.ZERO.matches(CohomologyVerdict.acyclic()))

    def test_semiorthogonality_pairs(self):
        report = check_block_semiorthogonality(self.collection, 3, X, ext=fake_ext(CohomologyVerdict.acyclic()))
        # 3 * 3 ordered pairs at twists 1 and 2.
        self.assertEqual(18, len(report.pairs))

    def test_serialize(self):
        report = check_exceptional(self.collection, X, ext=fake_ext(CohomologyVerdict.acyclic()))
        sio = io.StringIO()
        report.serialize(sio)
        self.assertTrue(sio.getvalue().startswith("exceptional S1 on igr:3:9 (index 1): pass"))


class TestCollections(unittest.TestCase):
    def test_b1_is_a_lefschetz_basis(self):
        report = check_lefschetz_basis(CollectionSpec.B1, X.index, X, threads=4)
        self.assertEqual(Status.PASS, report.status)
        self.assertEqual(7 * 8 // 2 * 7, len(report.pairs))

    def test_b2_is_a_lefschetz_basis(self):
        report = check_lefschetz_basis(CollectionSpec.B2, X.index, X, threads=4)
        self.assertEqual(Status.PASS, report.status)
        self.assertEqual([], report.undecided)

    def test_union_fails_once(self):
        report = check_lefschetz_basis(CollectionSpec.B1B2, X.index, X, threads=4)
        self.assertEqual(Status.FAIL, report.status)
        self.assertEqual(1, len(report.failures))
        failure = report.failures[0]
        self.assertEqual(("U[3,0,0]", "U[0,0,-2]", 0), (failure.left, failure.right, failure.twist))
        self.assertEqual(GradedDim.concentrated(4), failure.verdict.dims)

    def test_union_semiorthogonal(self):
        report = check_block_semiorthogonality(CollectionSpec.B1B2, X.index, X, threads=4)
        self.assertEqual(Status.PASS, report.status)
        self.assertEqual([], report.undecided)

    def test_line_bundles_are_not_semiorthogonal(self):
        o = TwistedBundle.of(0, 0, 0)
        generators = CollectionSpec("O,O(1)", [o, o.twisted(1)])
        report = check_block_semiorthogonality(generators, X.index, X)
        self.assertEqual(Status.FAIL, report.status)
        self.assertEqual([], report.undecided)
        failed = {(p.left_index, p.right_index, p.twist): p.verdict.dims for p in report.failures}
        self.assertEqual({(0, 1, 1): GradedDim.concentrated(0), (1, 0, 6): GradedDim.concentrated(15)}, failed)

    def test_json(self):
        report = check_exceptional(CollectionSpec.S2, X)
        data = report.to_json()
        self.assertEqual(["collection", "check", "space", "index", "status", "pairs"], list(data))
        self.assertEqual("pass", data["status"])


if __name__ == "__main__":
    unittest.main()
