"""
Pruebas del motor de conectivas: negación, implicación, join y meet.
"""

from itertools import product

import pytest
from hypothesis import given, settings

from conftest import b2_point, random_spaces
from src.core.services.connectives import (
    BoundStatus,
    ConnectiveEngine,
    Verdict,
    ZMode,
    meet,
)
from src.shared.exceptions import CapExceededError, InvalidArgumentError
from src.shared.utils import masks_by_size

MODES = [ZMode.ELEMENTS, ZMode.SUBSETS]


def _assert_oracles_agree(space, mode):
    engine = ConnectiveEngine(space, mode)
    for bits in masks_by_size(space.size):
        a = space.subset_of(bits)
        for y in space.points:
            assert engine.is_negation(a, y) == engine.is_negation_bruteforce(a, y), (a, y, mode)


class TestNegationOracles:

    @pytest.mark.parametrize("mode", MODES)
    @pytest.mark.parametrize("name", ["l1", "l2", "b1"])
    def test_small_spaces(self, request, name, mode):
        _assert_oracles_agree(request.getfixturevalue(name), mode)

    @pytest.mark.parametrize("mode", MODES)
    @settings(max_examples=25, deadline=None)
    @given(space=random_spaces(max_points=4))
    def test_random_spaces(self, mode, space):
        _assert_oracles_agree(space, mode)


class TestNegation:

    @pytest.mark.parametrize("mode", MODES)
    def test_literal_negations(self, l2, mode):
        engine = ConnectiveEngine(l2, mode)
        for label, expected in [("v1", "not_v1"), ("not_v1", "v1"), ("v2", "not_v2"), ("not_v2", "v2")]:
            result = engine.find_negations(l2.subset([label]))
            assert [p.label for p in result.candidates] == [expected]
            assert result.representative.label == expected

    @pytest.mark.parametrize("mode", MODES)
    def test_pair_of_negated_literals_has_no_negation(self, l2, mode):
        result = ConnectiveEngine(l2, mode).find_negations(l2.subset(["not_v1", "not_v2"]))
        assert result.candidates == ()
        assert result.representative is None
        assert result.all_equivalent
        assert not result.exists
        assert result.mode is mode

    @pytest.mark.parametrize("mode", MODES)
    def test_boolean_negation_is_complement(self, b2, mode):
        engine = ConnectiveEngine(b2, mode)
        for mask in range(1, 15):
            negation = engine.representative_negation(1 << (mask - 1))
            assert negation == (15 ^ mask) - 1, b2_point(b2, mask).label
            assert engine.negation_ids(1 << (mask - 1)) == (negation,)

    @pytest.mark.parametrize("mode", MODES)
    def test_top_has_no_negation(self, b2, mode):
        top = b2_point(b2, 0b1111)
        assert top.label == "1"
        assert ConnectiveEngine(b2, mode).representative_negation(1 << top.id) is None

    def test_negation_of_a_set(self, b2):
        result = ConnectiveEngine(b2).find_negations(b2.subset(["a", "b"]))
        assert result.representative == b2_point(b2, 0b0111)

    def test_candidates_depend_only_on_the_class(self, b2):
        engine = ConnectiveEngine(b2)
        pair = engine.find_negations(b2.subset(["a", "b"]))
        single = engine.find_negations(b2.subset(["a&b"]))
        assert pair.candidates == single.candidates


class TestNegationLaws:

    @pytest.mark.parametrize("mode", MODES)
    @settings(max_examples=30, deadline=None)
    @given(space=random_spaces())
    def test_involution(self, mode, space):
        engine = ConnectiveEngine(space, mode)
        for x in space.points:
            x_neg = engine.representative_negation(1 << x.id)
            if x_neg is None:
                continue
            assert engine.is_negation(space.singleton(space.points[x_neg]), x)
            x_neg_neg = engine.representative_negation(1 << x_neg)
            assert x_neg_neg is not None
            assert space.point_signatures[x_neg_neg] == space.point_signatures[x.id]

    @pytest.mark.parametrize("mode", MODES)
    @settings(max_examples=30, deadline=None)
    @given(space=random_spaces())
    def test_negation_respects_equivalence(self, mode, space):
        engine = ConnectiveEngine(space, mode)
        negations = {x.id: engine.representative_negation(1 << x.id) for x in space.points}
        signatures = space.point_signatures
        for x, y in product(space.points, repeat=2):
            x_neg, y_neg = negations[x.id], negations[y.id]
            if x_neg is None or y_neg is None:
                continue
            same = signatures[x.id] == signatures[y.id]
            assert same == (signatures[x_neg] == signatures[y_neg]), (x, y)

    @pytest.mark.parametrize("mode", MODES)
    @settings(max_examples=30, deadline=None)
    @given(space=random_spaces())
    def test_point_with_negated_pair_is_inconsistent(self, mode, space):
        engine = ConnectiveEngine(space, mode)
        for y in space.points:
            for y_neg in engine.negation_ids(1 << y.id):
                for x in space.points:
                    assert not space.is_consistent_bits((1 << x.id) | (1 << y.id) | (1 << y_neg))

    @pytest.mark.parametrize("name", ["l1", "l2", "l3", "b1", "b2"])
    def test_point_with_negated_pair_on_corpus(self, request, name):
        space = request.getfixturevalue(name)
        engine = ConnectiveEngine(space)
        for y in space.points:
            y_neg = engine.representative_negation(1 << y.id)
            if y_neg is None:
                continue
            for x in space.points:
                assert not space.is_consistent(space.subset_of((1 << x.id) | (1 << y.id) | (1 << y_neg)))


class TestImplication:

    def test_weakening(self, b2):
        engine = ConnectiveEngine(b2)
        assert engine.implies(b2.subset(["a"]), b2.subset(["a|b"])).is_true
        assert engine.implies(b2.subset(["a|b"]), b2.subset(["a"])).is_false

    def test_set_antecedent(self, b2):
        engine = ConnectiveEngine(b2)
        assert engine.implies(b2.subset(["a", "b"]), b2.subset(["a&b"])).is_true

    def test_undefined_without_negation(self, l2):
        verdict = ConnectiveEngine(l2).implies(l2.subset(["v1"]), l2.subset(["not_v1", "not_v2"]))
        assert verdict.value is Verdict.UNDEFINED
        assert not verdict.is_defined
        assert "not_v1" in verdict.reason

    def test_implies_bits(self, l2):
        engine = ConnectiveEngine(l2)
        v1 = 1 << l2.point("v1").id
        v2 = 1 << l2.point("v2").id
        assert engine.implies_bits(v1, v1) is True
        assert engine.implies_bits(v1, v2) is False


class TestJoinAndMeet:

    def test_boolean_join_is_disjunction(self, b2):
        engine = ConnectiveEngine(b2)
        for x_mask, y_mask in product(range(1, 15), repeat=2):
            joined = engine.join(b2_point(b2, x_mask), b2_point(b2, y_mask))
            assert joined == b2_point(b2, x_mask | y_mask)

    def test_join_with_top_is_undefined(self, b2):
        engine = ConnectiveEngine(b2)
        assert engine.join(b2.point("1"), b2.point("a")) is None
        result = engine.join_search(b2.point("a"), b2.point("1"))
        assert result.join is None
        assert result.negated is None
        assert "1" in result.reason

    def test_join_search_keeps_the_negated_set(self, b2):
        result = ConnectiveEngine(b2).join_search(b2.point("a"), b2.point("b"))
        assert result.join.label == "a|b"
        assert b2.labels_of(result.negated) == ["!b", "!a"]
        assert result.mode is ZMode.SUBSETS

    def test_literal_join(self, l2):
        engine = ConnectiveEngine(l2)
        assert engine.join(l2.point("v1"), l2.point("v2")) is None
        assert engine.join(l2.point("v1"), l2.point("v1")) == l2.point("v1")
        result = engine.join_search(l2.point("v1"), l2.point("v2"))
        assert l2.labels_of(result.negated) == ["not_v1", "not_v2"]
        assert result.reason

    def test_meet_is_union(self, l2):
        lhs, rhs = l2.subset(["v1"]), l2.subset(["v2"])
        assert meet(lhs, rhs) == l2.subset(["v1", "v2"])


class TestLubCheck:

    def test_boolean_space_passes(self, b2):
        report = ConnectiveEngine(b2).lub_check(b2.point("a"), b2.point("b"))
        assert report.passed
        assert report.join.label == "a|b"
        assert report.skipped == 1
        skipped = [e for e in report.entries if e.upper is BoundStatus.SKIPPED]
        assert [e.t.label for e in skipped] == ["1"]

    def test_literal_space_skips_upper_bound(self, l2):
        report = ConnectiveEngine(l2).lub_check(l2.point("v1"), l2.point("v2"))
        assert report.join is None
        assert report.passed
        assert all(e.upper is BoundStatus.SKIPPED for e in report.entries)
        assert len(report.entries) == l2.size


class TestModes:

    def test_parse(self):
        assert ZMode.parse("elements") is ZMode.ELEMENTS
        assert ZMode.parse(ZMode.SUBSETS) is ZMode.SUBSETS
        with pytest.raises(InvalidArgumentError):
            ZMode.parse("points")

    def test_subsets_mode_requires_cap(self, l3):
        with pytest.raises(CapExceededError):
            ConnectiveEngine(l3, ZMode.SUBSETS, cap=4)

    def test_elements_mode_ignores_cap(self, l3):
        engine = ConnectiveEngine(l3, ZMode.ELEMENTS, cap=4)
        result = engine.find_negations(l3.subset(["v3"]))
        assert result.representative.label == "not_v3"
