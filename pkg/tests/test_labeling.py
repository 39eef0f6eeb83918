"""Labeling feasibility conditions, preimages, and the CSV format."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdrd.constructions import petersen_even_odd, petersen_m1, petersen_m3
from sdrd.graphs import build_grid, build_petersen
from sdrd.labeling import (
    LABEL_VALUES,
    Labeling,
    labeling_from_csv,
    labeling_to_csv,
    preimage_sets,
    validate,
    validate_cubic_equiv,
    weight,
)

labelings = lambda n: st.tuples(*([st.sampled_from(LABEL_VALUES)] * n)).map(Labeling)


class TestLabeling:
    def test_rejects_zero_and_others(self):
        with pytest.raises(ValueError):
            Labeling((0, 1, 2))
        with pytest.raises(ValueError):
            Labeling((1, 4))

    def test_constant(self):
        lab = Labeling.constant(5, 3)
        assert lab.labels == (3, 3, 3, 3, 3)


class TestWeight:
    def test_full_graph(self):
        assert weight(Labeling.constant(8, 2)) == 16

    def test_alternating_scheme_weight(self):
        assert weight(petersen_even_odd(6, 1)) == 6

    def test_empty_subset(self):
        assert weight(Labeling.constant(4, 3), ()) == 0

    def test_subset(self):
        assert weight(Labeling((-1, 1, 2, 3)), (0, 3)) == 2

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            weight(Labeling((1, 1)), (2,))


class TestValidate:
    def test_all_two_always_valid(self):
        for g in (build_grid(2, 3), build_petersen(4, 1)):
            assert validate(g, Labeling.constant(g.n, 2)).valid

    def test_all_minus_one_fails_everywhere(self, k4):
        report = validate(k4, Labeling.constant(4, -1))
        assert not report.valid
        assert all(not ok for ok in report.defender_ok)
        assert all(not ok for ok in report.sum_ok)
        assert {v for v, cond in report.violations() if cond == "defender"} == {0, 1, 2, 3}

    def test_petersen_13_3_scheme(self):
        g = build_petersen(13, 3)
        report = validate(g, petersen_m3(13))
        assert report.valid and report.weight == 14

    def test_weight_reported_even_when_invalid(self, k4):
        report = validate(k4, Labeling.constant(4, -1))
        assert report.weight == -4

    def test_length_mismatch(self, k4):
        with pytest.raises(ValueError):
            validate(k4, Labeling.constant(5, 2))

    def test_threshold_tightens(self, k4):
        lab = Labeling((3, 1, -1, -1))  # closed sums are all 2 on K4
        assert validate(k4, lab, k=2).valid
        assert not validate(k4, lab, k=3).valid

    def test_exempt_vertices_are_skipped_but_still_defend(self):
        g = build_grid(2, 2)
        lab = Labeling((-1, 3, -1, -1))
        report = validate(g, lab)
        assert not report.valid
        assert report.violations() == [(2, "defender"), (2, "sum")]
        # exempting the undefended corner waives its own conditions; the
        # exempt 3-vertex keeps defending its neighbors throughout
        assert validate(g, lab, exempt={1, 2}).valid


class TestCubicEquivalentForm:
    def test_alternating_scheme_valid_both_ways(self):
        g = build_petersen(8, 1)
        lab = petersen_even_odd(8, 1)
        assert validate(g, lab).valid
        assert validate_cubic_equiv(g, lab).valid

    def test_three_negatives_in_a_neighborhood_fail(self, k4):
        lab = Labeling((3, -1, -1, -1))
        assert not validate_cubic_equiv(k4, lab).valid

    def test_all_two_valid(self, k4):
        assert validate_cubic_equiv(k4, Labeling.constant(4, 2)).valid

    def test_rejects_non_cubic(self):
        with pytest.raises(ValueError):
            validate_cubic_equiv(build_grid(2, 3), Labeling.constant(6, 2))

    @pytest.mark.slow
    def test_bulk_equivalence_with_sum_form(self):
        # 10^5 random labelings across cubic graphs up to 14 vertices
        graphs = [
            build_petersen(m, k)
            for m, k in ((3, 1), (4, 1), (5, 2), (6, 2), (7, 1), (7, 2))
        ]
        rng = random.Random(0)
        per_graph = 100_000 // len(graphs) + 1
        for g in graphs:
            for _ in range(per_graph):
                lab = Labeling(tuple(rng.choice(LABEL_VALUES) for _ in range(g.n)))
                assert validate(g, lab).valid == validate_cubic_equiv(g, lab).valid


class TestPreimages:
    def test_all_three(self):
        vm, v1, v2, v3 = preimage_sets(Labeling.constant(5, 3))
        assert (vm, v1, v2) == (frozenset(), frozenset(), frozenset())
        assert v3 == frozenset(range(5))

    def test_alternating_scheme_sizes(self):
        m = 8
        vm, v1, v2, v3 = preimage_sets(petersen_even_odd(m, 1))
        assert len(vm) == m and len(v2) == m and not v1 and not v3

    def test_prism_scheme_single_one_label(self):
        m = 9
        vm, v1, v2, v3 = preimage_sets(petersen_m1(m))
        assert v1 == frozenset({m + (m - 1)})  # the top vertex of the last column

    def test_partition(self):
        lab = Labeling((-1, 1, 2, 3, 2))
        parts = preimage_sets(lab)
        assert sum(map(len, parts)) == 5
        assert frozenset().union(*parts) == frozenset(range(5))


@settings(deadline=None, max_examples=200)
@given(st.data())
def test_weight_identity_from_preimages(data):
    n = data.draw(st.integers(min_value=1, max_value=30))
    lab = data.draw(labelings(n))
    vm, v1, v2, v3 = preimage_sets(lab)
    assert weight(lab) == 3 * len(v3) + 2 * len(v2) + len(v1) - len(vm)


@settings(deadline=None, max_examples=150)
@given(st.data())
def test_exemption_monotonicity(data):
    g = build_grid(2, 4)
    lab = data.draw(labelings(g.n))
    small = data.draw(st.sets(st.integers(0, g.n - 1), max_size=4))
    extra = data.draw(st.sets(st.integers(0, g.n - 1), max_size=4))
    if validate(g, lab, exempt=small).valid:
        assert validate(g, lab, exempt=small | extra).valid


class TestCsv:
    def test_round_trip(self):
        lab = Labeling((-1, 3, 2, 1, -1))
        assert labeling_from_csv(labeling_to_csv(lab)) == lab

    def test_header_required(self):
        with pytest.raises(ValueError):
            labeling_from_csv("0,-1\n1,2\n")

    def test_rows_must_cover_ids(self):
        with pytest.raises(ValueError):
            labeling_from_csv("vertex,label\n0,2\n2,2\n")

    def test_duplicate_vertex(self):
        with pytest.raises(ValueError):
            labeling_from_csv("vertex,label\n0,2\n0,3\n")
