import random

import pytest

from pauvc import (
    Classification,
    Graph,
    GraphKind,
    Model,
    ParseError,
    PreAssignment,
    VertexSet,
    classify,
    delete,
    is_independent_dominating_set,
    is_independent_set,
    is_vertex_cover,
    parse_dimacs,
    render_dimacs,
)


class TestVertexSet:
    def test_construction_and_membership(self):
        s = VertexSet(5, [3, 1])
        assert list(s) == [1, 3]
        assert len(s) == 2
        assert 1 in s and 0 not in s
        assert bool(s)
        assert not bool(VertexSet(5))

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            VertexSet(3, [3])
        with pytest.raises(ValueError):
            VertexSet(3, [-1])

    def test_set_algebra(self):
        a = VertexSet(6, [0, 1, 2])
        b = VertexSet(6, [2, 3])
        assert list(a | b) == [0, 1, 2, 3]
        assert list(a & b) == [2]
        assert list(a - b) == [0, 1]
        assert list(a ^ b) == [0, 1, 3]
        assert list(a.complement()) == [3, 4, 5]

    def test_universe_mismatch_rejected(self):
        with pytest.raises(ValueError):
            VertexSet(4, [0]) | VertexSet(5, [0])

    def test_subset_order(self):
        a = VertexSet(4, [1])
        b = VertexSet(4, [1, 2])
        assert a <= b and a < b and b >= a and b > a
        assert not b <= a

    def test_immutable_and_hashable(self):
        s = VertexSet(3, [0])
        with pytest.raises(AttributeError):
            s.mask = 7
        assert len({s, VertexSet(3, [0]), VertexSet(3, [1])}) == 2

    def test_from_mask_roundtrip(self):
        s = VertexSet.from_mask(6, 0b101010)
        assert list(s) == [1, 3, 5]
        assert VertexSet(6, [1, 3, 5]) == s


class TestGraph:
    def test_basic_accessors(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.n == 4 and g.m == 3
        assert g.degree(1) == 2
        assert list(g.neighbors(1)) == [0, 2]
        assert g.has_edge(2, 3) and g.has_edge(3, 2)
        assert not g.has_edge(0, 3)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1)])
        b = Graph(3, [(1, 0)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 2)])

    def test_json_roundtrip(self):
        g = Graph(4, [(0, 2), (1, 3)])
        assert Graph.from_json_dict(g.to_json_dict()) == g
        with pytest.raises(ParseError):
            Graph.from_json_dict({"n": 2})


class TestDimacs:
    def test_parse_and_render_roundtrip(self):
        text = "c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
        g = parse_dimacs(text)
        assert g.n == 4 and g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert parse_dimacs(render_dimacs(g)) == g

    def test_parse_bytes(self):
        assert parse_dimacs(b"p edge 2 1\ne 1 2\n").m == 1

    @pytest.mark.parametrize(
        "text",
        [
            "e 1 2\n",                       # edge before p line
            "p edge 2 1\np edge 2 1\ne 1 2", # duplicate p line
            "p edge 2 2\ne 1 2\n",           # declared count mismatch
            "p edge 2 1\ne 1 3\n",           # endpoint out of range
            "p edge 2 1\ne 1 1\n",           # self loop
            "p edge 2 1\nq 1 2\n",           # unknown line type
            "p edge two 1\ne 1 2\n",         # non-integer
            "",                              # missing p line
        ],
    )
    def test_malformed_rejected(self, text):
        with pytest.raises(ParseError):
            parse_dimacs(text)

    def test_duplicate_dimacs_edges_warn(self):
        with pytest.warns(UserWarning):
            g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\ne 2 3\n")
        assert g.m == 2


class TestPredicates:
    def test_vertex_cover_predicate(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert is_vertex_cover(g, g.vertex_set([1]))
        assert not is_vertex_cover(g, g.vertex_set([0]))

    def test_independent_set_predicate(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert is_independent_set(g, g.vertex_set([0, 2]))
        assert not is_independent_set(g, g.vertex_set([0, 1]))

    def test_independent_dominating_predicate(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert is_independent_dominating_set(g, g.vertex_set([1, 3]))
        assert not is_independent_dominating_set(g, g.vertex_set([0]))
        assert not is_independent_dominating_set(g, g.vertex_set([0, 1]))

    def test_universe_checked(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(ValueError):
            is_vertex_cover(g, VertexSet(4, [0]))


class TestClassify:
    def test_tree(self):
        c = classify(Graph(3, [(0, 1), (1, 2)]))
        assert c.kind is GraphKind.TREE
        assert len(c.components) == 1
        assert c.parts is not None

    def test_forest(self):
        c = classify(Graph(4, [(0, 1), (2, 3)]))
        assert c.kind is GraphKind.FOREST
        assert len(c.components) == 2

    def test_bipartite_cycle(self):
        c = classify(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        assert c.kind is GraphKind.BIPARTITE
        part_sets = {tuple(p) for p in c.parts}
        assert part_sets == {(0, 2), (1, 3)}

    def test_general(self):
        c = classify(Graph(3, [(0, 1), (1, 2), (0, 2)]))
        assert c.kind is GraphKind.GENERAL
        assert c.parts is None

    def test_single_vertex_is_tree(self):
        assert classify(Graph(1, [])).kind is GraphKind.TREE

    def test_parts_cover_all_vertices_when_bipartite(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(1, 8)
            left = [v for v in range(n) if rng.random() < 0.5]
            edges = [
                (u, v)
                for u in left
                for v in range(n)
                if v not in left and rng.random() < 0.5
            ]
            c = classify(Graph(n, edges))
            assert c.parts is not None
            merged = c.parts[0] | c.parts[1]
            assert len(merged) == n
            assert not (c.parts[0] & c.parts[1])


class TestDelete:
    def test_delete_keeps_induced_edges(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        sub, mapping = delete(g, g.vertex_set([1]))
        assert sub.n == 4
        assert mapping == {0: 0, 2: 1, 3: 2, 4: 3}
        assert sub.edges() == [(1, 2), (2, 3)]

    def test_delete_nothing(self):
        g = Graph(3, [(0, 2)])
        sub, mapping = delete(g, g.vertex_set([]))
        assert sub == g and mapping == {0: 0, 1: 1, 2: 2}


class TestPreAssignment:
    def test_include_model(self):
        pa = PreAssignment.including(VertexSet(4, [0, 2]))
        assert pa.model is Model.INCLUDE
        assert pa.size() == 2 and pa.n == 4

    def test_exclude_cannot_carry_include(self):
        with pytest.raises(ValueError):
            PreAssignment(Model.EXCLUDE, VertexSet(3, [0]), VertexSet(3, [1]))

    def test_include_cannot_carry_exclude(self):
        with pytest.raises(ValueError):
            PreAssignment(Model.INCLUDE, VertexSet(3, [0]), VertexSet(3, [1]))

    def test_mixed_disjointness(self):
        with pytest.raises(ValueError):
            PreAssignment.mixed(VertexSet(3, [0]), VertexSet(3, [0]))

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            PreAssignment.mixed(VertexSet(3, [0]), VertexSet(4, [1]))

    def test_json_roundtrip(self):
        pa = PreAssignment.mixed(VertexSet(5, [1]), VertexSet(5, [2, 4]))
        data = pa.to_json_dict()
        assert data == {"model": "mixed", "include": [1], "exclude": [2, 4]}
        assert PreAssignment.from_json_dict(data, 5) == pa

    def test_json_malformed(self):
        with pytest.raises(ParseError):
            PreAssignment.from_json_dict({"model": "nope", "include": [], "exclude": []}, 3)
        with pytest.raises(ParseError):
            PreAssignment.from_json_dict({"model": "include", "include": [9], "exclude": []}, 3)
