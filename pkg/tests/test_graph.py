"""Graph construction, arc indexing, signs and the six-class arc partition."""

import numpy as np
import pytest

from matchwalk import (
    ArcClass,
    InvalidArc,
    MatchingTooLarge,
    NotAMatching,
    arc_classes,
    build_signed_complete_graph,
    class_counts,
    classify_arc,
)


def brute_force_counts(graph, sign):
    counts = {cls: 0 for cls in ArcClass}
    for index in range(graph.num_arcs):
        u, v = graph.arc_endpoints(index)
        counts[classify_arc(graph, sign, (u, v))] += 1
    return counts


class TestConstruction:
    def test_canonical_t1(self):
        graph, sign = build_signed_complete_graph(4, 1)
        assert graph.matching == ((0, 1),)
        assert list(np.flatnonzero(graph.matched_mask)) == [0, 1]
        assert sign.tau(0, 1) == -1
        assert sign.tau(1, 0) == -1
        assert sign.tau(0, 2) == 1
        assert sign.tau(3, 4) == 1

    def test_unsigned(self):
        graph, sign = build_signed_complete_graph(4, 0)
        assert graph.matching == ()
        assert np.all(sign.sigma == 1)
        assert not graph.matched_mask.any()

    def test_perfect_matching_covers_all(self):
        graph, _ = build_signed_complete_graph(3, 2)
        assert graph.matching == ((0, 1), (2, 3))
        assert graph.matched_mask.all()

    def test_marked_arc_orientation(self):
        # sigma = -1 sits on the low-to-high arc; the reversal carries +1
        graph, sign = build_signed_complete_graph(6, 0, pairs=((5, 2),))
        assert graph.matching == ((2, 5),)
        assert sign.sigma[graph.arc_index(2, 5)] == -1
        assert sign.sigma[graph.arc_index(5, 2)] == 1
        assert len(sign.marked_arc_indices) == 1

    def test_sigma_negative_count_is_t(self):
        graph, sign = build_signed_complete_graph(9, 4)
        assert int((sign.sigma == -1).sum()) == 4

    def test_random_placement_reproducible(self):
        g1, _ = build_signed_complete_graph(10, 3, placement="random", seed=42)
        g2, _ = build_signed_complete_graph(10, 3, placement="random", seed=42)
        g3, _ = build_signed_complete_graph(10, 3, placement="random", seed=43)
        assert g1.matching == g2.matching
        assert g1.matching != g3.matching
        endpoints = [w for p in g1.matching for w in p]
        assert len(set(endpoints)) == 6

    def test_matching_too_large(self):
        with pytest.raises(MatchingTooLarge):
            build_signed_complete_graph(4, 3)

    def test_not_a_matching(self):
        with pytest.raises(NotAMatching):
            build_signed_complete_graph(5, pairs=((0, 1), (1, 2)))
        with pytest.raises(NotAMatching):
            build_signed_complete_graph(5, pairs=((2, 2),))
        with pytest.raises(NotAMatching):
            build_signed_complete_graph(5, pairs=((0, 9),))

    def test_bad_n(self):
        with pytest.raises(ValueError):
            build_signed_complete_graph(0, 0)


class TestArcIndexing:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_bijection(self, n):
        graph, _ = build_signed_complete_graph(n, 0)
        seen = set()
        for u in range(n + 1):
            for v in range(n + 1):
                if u == v:
                    continue
                index = graph.arc_index(u, v)
                assert graph.arc_endpoints(index) == (u, v)
                seen.add(index)
        assert seen == set(range(n * (n + 1)))

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_inverse_is_a_fixed_point_free_involution(self, n):
        graph, _ = build_signed_complete_graph(n, 0)
        assert np.all(graph.inverse[graph.inverse] == np.arange(graph.num_arcs))
        assert np.all(graph.inverse != np.arange(graph.num_arcs))

    def test_invalid_arcs(self):
        graph, sign = build_signed_complete_graph(4, 1)
        with pytest.raises(InvalidArc):
            graph.arc_index(2, 2)
        with pytest.raises(InvalidArc):
            graph.arc_index(0, 5)
        with pytest.raises(InvalidArc):
            classify_arc(graph, sign, (3, 3))


class TestClassification:
    def test_spec_table_n4_t1(self):
        graph, sign = build_signed_complete_graph(4, 1)
        assert classify_arc(graph, sign, (0, 1)) == ArcClass.A1
        assert classify_arc(graph, sign, (1, 0)) == ArcClass.A2
        assert classify_arc(graph, sign, (2, 0)) == ArcClass.A4
        assert classify_arc(graph, sign, (0, 2)) == ArcClass.A5
        assert classify_arc(graph, sign, (2, 3)) == ArcClass.A6
        counts = brute_force_counts(graph, sign)
        assert counts[ArcClass.A3] == 0

    def test_counts_examples(self):
        expectations = {
            (4, 1): (1, 1, 0, 6, 6, 6),
            (4, 0): (0, 0, 0, 0, 0, 20),
            (5, 3): (3, 3, 24, 0, 0, 0),
        }
        for (n, t), expected in expectations.items():
            graph, sign = build_signed_complete_graph(n, t)
            counts = class_counts(graph, sign)
            assert tuple(counts[cls] for cls in ArcClass) == expected
            assert sum(counts.values()) == n * (n + 1)

    def test_counts_match_brute_force_all_small_instances(self):
        for n in range(1, 13):
            for t in range((n + 1) // 2 + 1):
                graph, sign = build_signed_complete_graph(n, t)
                assert class_counts(graph, sign) == brute_force_counts(graph, sign)

    def test_vectorized_classification_matches_scalar(self):
        for n, t in [(4, 1), (7, 3), (9, 5), (6, 0)]:
            graph, sign = build_signed_complete_graph(n, t)
            codes = arc_classes(graph, sign)
            for index in range(graph.num_arcs):
                arc = graph.arc_endpoints(index)
                assert codes[index] == classify_arc(graph, sign, arc)

    def test_reversal_swaps_classes(self):
        swap = {
            ArcClass.A1: ArcClass.A2,
            ArcClass.A2: ArcClass.A1,
            ArcClass.A3: ArcClass.A3,
            ArcClass.A4: ArcClass.A5,
            ArcClass.A5: ArcClass.A4,
            ArcClass.A6: ArcClass.A6,
        }
        for n, t in [(4, 1), (7, 3), (5, 3)]:
            graph, sign = build_signed_complete_graph(n, t)
            for index in range(graph.num_arcs):
                u, v = graph.arc_endpoints(index)
                direct = classify_arc(graph, sign, (u, v))
                reverse = classify_arc(graph, sign, (v, u))
                assert reverse == swap[direct]

    def test_tau_is_edge_level(self):
        graph, sign = build_signed_complete_graph(7, 2, placement="random", seed=3)
        for u in range(8):
            for v in range(u + 1, 8):
                assert sign.tau(u, v) == sign.tau(v, u)
                expected = -1 if (u, v) in graph.matching else 1
                assert sign.tau(u, v) == expected
