"""
Pruebas de inconsistentes minimales y de la detección de espacios booleanos.
"""

import pytest
from hypothesis import given, settings

from conftest import random_spaces
from src.core.services.structure import PARTIAL_MAX_SIZE, StructureAnalyzer
from src.shared.exceptions import CapExceededError
from src.shared.utils import iter_bits, masks_by_size


@pytest.fixture(scope="module")
def chain(builder):
    return builder.build_explicit(["p", "q", "r"], [["p", "q"], ["q", "r"]])


class TestMinimalInconsistent:

    def test_literal_pairs(self, l2):
        family = StructureAnalyzer(l2).minimal_inconsistent_sets()
        assert [l2.labels_of(s) for s in family.sets] == [["v1", "not_v1"], ["v2", "not_v2"]]
        assert family.complete
        assert family.max_size_searched is None

    def test_covers(self, l2):
        family = StructureAnalyzer(l2).minimal_inconsistent_sets()
        assert family.covers(l2.universe())
        assert not family.covers(l2.subset(["v1", "v2"]))

    def test_chain(self, chain):
        family = StructureAnalyzer(chain).minimal_inconsistent_sets()
        assert [chain.labels_of(s) for s in family.sets] == [["p", "r"]]

    def test_boolean_triple(self, b2):
        family = StructureAnalyzer(b2).minimal_inconsistent_sets()
        triples = [s for s in family.sets if len(s) == 3]
        assert b2.subset(["!b", "!a"]).union(b2.subset_of(1 << 5)) in triples
        assert b2.subset(["a", "!a"]) in family.sets

    def test_over_cap_is_rejected(self, l3):
        with pytest.raises(CapExceededError):
            StructureAnalyzer(l3, cap=4).minimal_inconsistent_sets()

    def test_partial_search(self, l3):
        family = StructureAnalyzer(l3, cap=4).minimal_inconsistent_sets(allow_partial=True)
        assert not family.complete
        assert family.max_size_searched == PARTIAL_MAX_SIZE
        assert len(family) == 3
        assert all(len(s) == 2 for s in family.sets)

    @settings(max_examples=60, deadline=None)
    @given(random_spaces())
    def test_family_characterises_inconsistency(self, space):
        family = StructureAnalyzer(space).minimal_inconsistent_sets()
        assert family.complete
        for bits in masks_by_size(space.size):
            subset = space.subset_of(bits)
            assert family.covers(subset) == (not space.is_consistent(subset))
        for member in family.sets:
            assert not space.is_consistent(member)
            for i in iter_bits(member.bits):
                assert space.is_consistent_bits(member.bits & ~(1 << i))


class TestDetectBoolean:

    def test_literal_space_is_boolean(self, l2):
        report = StructureAnalyzer(l2).detect_boolean()
        assert report.is_boolean
        assert report.first_failure is None
        assert report.pairing == {"v1": "not_v1", "not_v1": "v1", "v2": "not_v2", "not_v2": "v2"}
        assert report.equiv_supersets_check.vacuous

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_every_literal_space_is_boolean(self, builder, n):
        space = builder.build_literal(n)
        report = StructureAnalyzer(space).detect_boolean()
        assert report.is_boolean
        assert report.equiv_supersets_check.vacuous
        assert all(report.pairing[f"v{i}"] == f"not_v{i}" for i in range(1, n + 1))

    def test_full_boolean_fails_on_doubletons(self, b2):
        report = StructureAnalyzer(b2).detect_boolean()
        assert not report.is_boolean
        assert report.first_failure.name == "doubletons"
        assert [len(s) for s in report.doubleton_check.witness] == [3]
        assert report.pairing == {}

    def test_full_boolean_overlapping_doubletons(self, b2):
        witness = StructureAnalyzer(b2).detect_boolean().disjoint_check.witness
        assert [s.ids for s in witness] == [(0, 1), (0, 3)]

    def test_top_point_is_unpaired(self, b1):
        report = StructureAnalyzer(b1).detect_boolean()
        assert report.first_failure.name == "cover"
        assert [b1.labels_of(s) for s in report.cover_check.witness] == [["1"]]

    def test_chain_fails_cover(self, chain):
        report = StructureAnalyzer(chain).detect_boolean()
        assert report.doubleton_check.passed
        assert report.disjoint_check.passed
        assert not report.cover_check.passed
        assert [chain.labels_of(s) for s in report.cover_check.witness] == [["q"]]

    def test_condition_order(self, l2):
        names = [check.name for check in StructureAnalyzer(l2).detect_boolean().checks]
        assert names == ["doubletons", "disjoint", "cover", "exactness", "equivalent_supersets"]

    def test_over_cap(self, l3):
        with pytest.raises(CapExceededError):
            StructureAnalyzer(l3, cap=5).detect_boolean()
