import random
from itertools import combinations

import pytest

from coverramsey import (EdgeColoring, Hypergraph, complete_host,
                         format_coloring, format_hypergraph,
                         minimal_covering_subhypergraph, parse_coloring,
                         parse_hypergraph)

from _oracles import fano, random_hypergraph


class TestShadow:
    def test_single_edge_gives_triangle(self):
        hg = Hypergraph(3, [(1, 2, 3)])
        assert hg.shadow().pairs == {(1, 2), (1, 3), (2, 3)}

    def test_fano_shadow_is_k7(self):
        # oracle: check all 21 pairs against the 7 lines directly
        hg = fano()
        expected = {p for p in combinations(range(1, 8), 2)
                    if any(set(p) <= set(line) for line in hg.edges)}
        assert len(expected) == 21
        assert hg.shadow().pairs == frozenset(expected)
        assert hg.shadow().is_complete()

    def test_no_edges_no_pairs(self):
        hg = Hypergraph(4, [])
        assert hg.shadow().pairs == frozenset()
        assert not hg.shadow().is_complete()


class TestCovering:
    def test_fano_is_covering(self):
        assert fano().is_covering()

    def test_uncovered_vertex(self):
        hg = Hypergraph(4, [(1, 2, 3)])
        assert not hg.is_covering()

    def test_complete_2_graph(self):
        assert complete_host(5).is_covering()

    def test_equivalences_on_random_instances(self):
        # covering <=> complete shadow <=> min co-degree >= 1
        rng = random.Random(7)
        for _ in range(200):
            hg = random_hypergraph(rng)
            covering = hg.is_covering()
            assert covering == hg.shadow().is_complete()
            assert covering == (hg.min_codegree() >= 1)


class TestCodegree:
    def test_fano_pair(self):
        assert fano().codegree({1, 2}) == 1

    def test_fano_triple_uncovered(self):
        assert fano().codegree({1, 2, 4}) == 0

    def test_k5_pair(self):
        assert complete_host(5).codegree({1, 2}) == 1

    def test_fano_min_codegree(self):
        assert fano().min_codegree() == 1

    def test_all_fano_pairs_codegree_one(self):
        hg = fano()
        assert all(hg.codegree(p) == 1
                   for p in combinations(range(1, 8), 2))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            fano().codegree({1, 9})


class TestMinimalCovering:
    def test_k5_already_minimal(self):
        hg = complete_host(5)
        assert minimal_covering_subhypergraph(hg) == hg

    def test_fano_already_minimal(self):
        hg = fano()
        assert minimal_covering_subhypergraph(hg) == hg

    def test_fano_plus_extra_edge_reduces_to_fano(self):
        lines = list(fano().edges) + [(1, 2, 4)]
        hg = Hypergraph(7, lines, uniformity={3})
        assert minimal_covering_subhypergraph(hg) == fano()

    def test_rejects_non_covering(self):
        with pytest.raises(ValueError):
            minimal_covering_subhypergraph(Hypergraph(4, [(1, 2, 3)]))

    def test_minimality_and_bounds_on_random_hosts(self):
        from _oracles import random_covering_hypergraph
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(4, 8)
            hg = random_covering_hypergraph(rng, n, k=3, extra=6)
            sub = minimal_covering_subhypergraph(hg)
            assert sub.is_covering()
            assert set(sub.edges) <= set(hg.edges)
            # every kept edge is the unique cover of some pair
            for i, edge in enumerate(sub.edges):
                assert any(sub.codegree(p) == 1
                           for p in combinations(edge, 2)), edge
            k = sub.max_edge_size
            npairs = n * (n - 1) // 2
            kpairs = k * (k - 1) // 2
            assert npairs / kpairs <= sub.num_edges <= npairs


class TestConstruction:
    def test_canonical_order(self):
        a = Hypergraph(5, [(3, 4, 5), (1, 2, 3)])
        b = Hypergraph(5, [(1, 2, 3), (3, 4, 5)])
        assert a == b
        assert a.edges == ((1, 2, 3), (3, 4, 5))

    def test_uniformity_inferred(self):
        hg = Hypergraph(5, [(1, 2), (1, 2, 3)])
        assert hg.uniformity == frozenset({2, 3})
        assert hg.max_edge_size == 3

    def test_uniformity_may_be_superset(self):
        hg = Hypergraph(5, [(1, 2)], uniformity={2, 3})
        assert hg.max_edge_size == 3

    def test_size_outside_uniformity_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(5, [(1, 2, 3)], uniformity={2})

    def test_singleton_edge_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [(2,)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [(1, 2), (2, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [(1, 4)])

    def test_immutable(self):
        hg = fano()
        with pytest.raises(AttributeError):
            hg.n = 9


class TestTextFormat:
    def test_round_trip_fano(self):
        hg = fano()
        assert parse_hypergraph(format_hypergraph(hg), {3}) == hg

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(50):
            hg = random_hypergraph(rng)
            assert parse_hypergraph(format_hypergraph(hg)) == hg

    def test_comments_ignored(self):
        text = "# a comment\n3 1\n# another\n1 2 3\n"
        assert parse_hypergraph(text) == Hypergraph(3, [(1, 2, 3)])

    def test_trailing_newline_required(self):
        with pytest.raises(ValueError):
            parse_hypergraph("3 1\n1 2 3")

    def test_edge_count_mismatch(self):
        with pytest.raises(ValueError):
            parse_hypergraph("3 2\n1 2 3\n")

    def test_non_ascending_edge_line(self):
        with pytest.raises(ValueError):
            parse_hypergraph("3 1\n2 1 3\n")

    def test_bad_header(self):
        with pytest.raises(ValueError):
            parse_hypergraph("3\n1 2\n")


class TestColoringSidecar:
    def test_round_trip(self):
        col = EdgeColoring((0, 1, 1, 0, 1, 0, 0), 2)
        assert parse_coloring(format_coloring(col), 7) == col

    def test_comment_lines_allowed(self):
        assert parse_coloring("# note\n0110\n", 4).colors == (0, 1, 1, 0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            parse_coloring("010\n", 4)

    def test_non_digit(self):
        with pytest.raises(ValueError):
            parse_coloring("01x0\n", 4)

    def test_color_outside_palette(self):
        with pytest.raises(ValueError):
            parse_coloring("012\n", 3, palette_size=2)

    def test_sidecar_rejects_wide_palettes(self):
        with pytest.raises(ValueError):
            format_coloring(EdgeColoring((11,), 12))

    def test_indices_of(self):
        col = EdgeColoring((0, 1, 0, 1), 2)
        assert col.indices_of(1) == (1, 3)
