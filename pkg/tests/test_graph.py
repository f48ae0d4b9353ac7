"""Move-graph structure, path decomposition, and the counting checks."""

import pytest

from chardeg import (
    build_graph,
    component_class_check,
    components,
    count_partitions,
    enumerate_partitions,
    graph_structure_check,
    lambda_dn,
    lambda_up,
    local_extrema_check,
    low_degree_count_check,
    low_degree_count_check_all,
    near_max_count_check,
    near_max_count_check_all,
    neighbors,
    ratio_lemma_check,
    vertex_degree,
)
from chardeg.serialize import graph_from_doc, graph_to_doc, graph_to_dot


def union_find_components(n):
    """Independent component count/sizes from the raw edge list."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lam in enumerate_partitions(n):
        parent[lam] = lam
    for lam in list(parent):
        for mu in neighbors(lam):
            ra, rb = find(lam), find(mu)
            if ra != rb:
                parent[ra] = rb
    sizes = {}
    for lam in list(parent):
        root = find(lam)
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values(), reverse=True)


class TestBuildGraph:
    def test_n4(self):
        g = build_graph(4)
        assert g.components == (
            ((4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)),
            ((2, 2),),
        )

    def test_n1(self):
        assert build_graph(1).components == (((1,),),)

    def test_n3(self):
        assert build_graph(3).components == (((3,), (2, 1), (1, 1, 1)),)

    def test_rejects_n0(self):
        with pytest.raises(ValueError):
            build_graph(0)

    def test_vertex_cover(self):
        for n in range(1, 22):
            g = build_graph(n)
            assert g.vertex_count == count_partitions(n)

    def test_components_accessor(self):
        g = build_graph(5)
        assert components(g) == list(g.components)

    def test_against_union_find(self):
        for n in range(1, 15):
            g = build_graph(n)
            assert sorted((len(c) for c in g.components), reverse=True) == \
                union_find_components(n)

    def test_degrees(self):
        assert vertex_degree((3, 1)) == 2
        assert vertex_degree((2, 2)) == 0
        assert vertex_degree((4,)) == 1

    def test_path_adjacency_and_symmetry(self):
        for n in range(1, 22):
            for comp in build_graph(n).components:
                for a, b in zip(comp, comp[1:]):
                    assert lambda_dn(a) == b and lambda_up(b) == a
                assert lambda_up(comp[0]) is None
                assert lambda_dn(comp[-1]) is None


class TestStructureChecks:
    def test_structure_passes(self):
        for n in range(1, 26):
            assert graph_structure_check(n).passed

    def test_class_intersection_passes(self):
        for n in range(1, 26):
            assert component_class_check(n).passed

    def test_local_extrema_passes(self):
        for n in range(1, 26):
            assert local_extrema_check(n).passed

    def test_ties_happen_and_are_reported(self):
        # at n = 4 the two middle path vertices are conjugate with equal
        # hook products; the check reports the tie without failing
        rep = local_extrema_check(4)
        assert rep.passed
        assert "adjacent-ties=1" in rep.notes


class TestRatioLemma:
    def test_boundary_at_n3(self):
        rep = ratio_lemma_check(3)
        assert rep.passed
        assert any("boundary" in note for note in rep.notes)

    def test_passes_small_range(self):
        for n in range(1, 26):
            assert ratio_lemma_check(n).passed


class TestCountChecks:
    def test_low_degree_examples(self):
        assert low_degree_count_check(9, 1).passed
        assert low_degree_count_check(5, 1).passed
        # n=7: every class passes
        assert low_degree_count_check_all(7).passed

    def test_near_max_examples(self):
        rep = near_max_count_check(5, 1)
        assert rep.passed
        assert rep.inequalities[0].left == 4  # degrees 5,5,4,4 inside (1.5, 6)
        assert rep.inequalities[0].right == 1
        assert near_max_count_check(7, 1).passed
        assert near_max_count_check(12, 2).passed

    def test_r_out_of_range(self):
        with pytest.raises(ValueError):
            low_degree_count_check(5, 0)
        with pytest.raises(ValueError):
            near_max_count_check(5, 99)

    def test_all_classes_small_range(self):
        for n in range(5, 21):
            assert low_degree_count_check_all(n).passed
            assert near_max_count_check_all(n).passed

    def test_single_r_consistent_with_bulk(self):
        for n in (6, 9, 11):
            r = 1
            while True:
                try:
                    rep = low_degree_count_check(n, r)
                except ValueError:
                    break
                assert rep.passed
                assert near_max_count_check(n, r).passed
                r += 1
            assert r > 2  # at least two classes exercised


class TestExports:
    def test_dot_n1(self):
        dot = graph_to_dot(build_graph(1))
        assert dot == 'graph partitions_of_1 {\n  "1";\n}\n'

    def test_dot_n4(self):
        dot = graph_to_dot(build_graph(4))
        assert '"4" -- "3,1";' in dot
        assert '"2,2";' in dot

    def test_json_doc_n4(self):
        doc = graph_to_doc(build_graph(4))
        assert doc["schema"] == 1
        assert doc["components"] == [
            ["4", "3,1", "2,1,1", "1,1,1,1"],
            ["2,2"],
        ]

    def test_json_round_trip(self):
        for n in (1, 4, 6, 9):
            g = build_graph(n)
            assert graph_from_doc(graph_to_doc(g)) == g
