import numpy as np
import pytest

from sfmst.graph import Edge, EdgeNotInGraphError, GraphError, build_graph
from sfmst.mst import (
    DisconnectedGraphError,
    GraphTooLargeError,
    SpanningTree,
    brute_force_mst,
    is_feasible_extension,
    kruskal,
    kruskal_with_trace,
    prim,
    read_tree,
    verify_spanning_tree,
    write_tree,
)

from conftest import FIG3_MST, FIG3_WEIGHT, random_connected_graph


def edge_set(tree):
    return {(e.u, e.v) for e in tree.edges}


class TestKruskal:
    def test_small_figure_graph(self, fig2_graph):
        t = kruskal(fig2_graph)
        assert edge_set(t) == {(0, 1), (1, 2), (2, 3)}
        assert t.total_weight == 3.0

    def test_worked_example(self, fig3_graph):
        t = kruskal(fig3_graph)
        assert edge_set(t) == FIG3_MST
        assert t.total_weight == FIG3_WEIGHT

    def test_two_nodes(self):
        t = kruskal(build_graph(2, [(0, 1, 7.0)]))
        assert edge_set(t) == {(0, 1)}
        assert t.total_weight == 7.0

    def test_single_node(self):
        t = kruskal(build_graph(1, []))
        assert t.edges == ()
        assert t.total_weight == 0.0

    def test_empty_node_set(self):
        with pytest.raises(GraphError):
            kruskal(build_graph(0, []))

    def test_disconnected_reports_components(self):
        g = build_graph(5, [(0, 1, 1), (2, 3, 1)])
        with pytest.raises(DisconnectedGraphError) as exc:
            kruskal(g)
        assert exc.value.n_components == 3

    def test_trace_discard_sequence(self, fig3_graph):
        t, steps = kruskal_with_trace(fig3_graph)
        assert edge_set(t) == FIG3_MST
        discarded = [s.edge for s in steps if not s.accepted]
        assert discarded == [Edge(3, 5), Edge(0, 2), Edge(1, 4), Edge(1, 3)]

    def test_deterministic(self, fig3_graph):
        a, b = kruskal(fig3_graph), kruskal(fig3_graph)
        assert edge_set(a) == edge_set(b)
        assert a.total_weight == b.total_weight


class TestPrim:
    def test_worked_example_any_start(self, fig3_graph):
        for start in range(6):
            assert prim(fig3_graph, start).total_weight == FIG3_WEIGHT

    def test_single_node(self):
        t = prim(build_graph(1, []))
        assert t.edges == () and t.total_weight == 0.0

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            prim(build_graph(4, [(0, 1, 1)]))

    def test_agrees_with_kruskal_on_many_random_graphs(self):
        rng = np.random.default_rng(12)
        for _ in range(10_000):
            n = int(rng.integers(2, 9))
            g = random_connected_graph(rng, n, max_extra=4)
            assert prim(g).total_weight == kruskal(g).total_weight


class TestBruteForce:
    def test_weighted_triangle(self):
        g = build_graph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
        w, trees = brute_force_mst(g)
        assert w == 3.0
        assert trees == [frozenset({Edge(0, 1), Edge(0, 2)})]

    def test_unit_triangle_three_optima(self, triangle):
        w, trees = brute_force_mst(triangle)
        assert w == 2.0
        assert len(trees) == 3

    def test_worked_example_contains_kruskal_tree(self, fig3_graph):
        w, trees = brute_force_mst(fig3_graph)
        assert w == FIG3_WEIGHT
        assert frozenset(kruskal(fig3_graph).edges) in trees

    def test_refuses_large(self):
        g = build_graph(11, [(i, i + 1, 1) for i in range(10)])
        with pytest.raises(GraphTooLargeError):
            brute_force_mst(g)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            brute_force_mst(build_graph(3, [(0, 1, 1)]))


class TestOptimality:
    def test_kruskal_matches_oracle(self):
        rng = np.random.default_rng(99)
        for trial in range(150):
            n = int(rng.integers(2, 9))
            g = random_connected_graph(rng, n, max_extra=4)
            best, _ = brute_force_mst(g)
            assert kruskal(g).total_weight == best

    def test_distinct_weights_unique_tree(self):
        rng = np.random.default_rng(23)
        for trial in range(100):
            n = int(rng.integers(2, 9))
            g = random_connected_graph(rng, n, max_extra=4, distinct=True)
            best, trees = brute_force_mst(g)
            assert len(trees) == 1
            k, p = kruskal(g), prim(g)
            assert frozenset(k.edges) == trees[0] == frozenset(p.edges)
            assert k.total_weight == best == p.total_weight

    def test_tie_permutation_preserves_weight(self):
        # shuffling the input edge order (hence the order of equal weights
        # in a plain stable sort) never changes the optimal weight
        rng = np.random.default_rng(4)
        for _ in range(60):
            n = int(rng.integers(3, 9))
            g = random_connected_graph(rng, n, max_extra=5, w_lo=1, w_hi=3)
            reference = kruskal(g).total_weight
            triples = [(e.u, e.v, float(w)) for e, w in g.edges()]
            for _ in range(3):
                rng.shuffle(triples)
                # stable sort by weight only: tie order now follows the shuffle
                order = sorted(range(len(triples)), key=lambda i: triples[i][2])
                total, parent = 0.0, list(range(n))

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for i in order:
                    u, v, w = triples[i]
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
                        total += w
                assert total == reference


class TestFeasibleExtension:
    def test_figure_completion(self, fig2_graph):
        partial = [Edge(0, 1), Edge(1, 2)]
        assert is_feasible_extension(fig2_graph, partial, Edge(2, 3)) is True

    def test_cycle_closing_edge(self, fig2_graph):
        partial = [Edge(0, 1), Edge(1, 2), Edge(1, 3)]
        assert is_feasible_extension(fig2_graph, partial, Edge(2, 3)) is False

    def test_heavier_crossing_edge(self, fig2_graph):
        # (1,3) crosses the same cut as (2,3) but is not minimal
        partial = [Edge(0, 1), Edge(1, 2)]
        assert is_feasible_extension(fig2_graph, partial, Edge(1, 3)) is False

    def test_unknown_edge(self, fig2_graph):
        with pytest.raises(EdgeNotInGraphError):
            is_feasible_extension(fig2_graph, [], Edge(0, 3))

    def test_every_accepted_edge_is_feasible(self):
        rng = np.random.default_rng(42)
        for _ in range(60):
            n = int(rng.integers(3, 9))
            g = random_connected_graph(rng, n, max_extra=4)
            _, steps = kruskal_with_trace(g)
            partial = []
            for step in steps:
                if step.accepted:
                    assert is_feasible_extension(g, partial, step.edge)
                    partial.append(step.edge)
                else:
                    assert not is_feasible_extension(g, partial, step.edge)


class TestVerify:
    def test_kruskal_output_verifies(self, fig3_graph):
        assert verify_spanning_tree(fig3_graph, kruskal(fig3_graph))

    def test_edge_count(self, fig3_graph):
        t = kruskal(fig3_graph)
        short = SpanningTree(6, t.edges[:-1], t.total_weight)
        res = verify_spanning_tree(fig3_graph, short)
        assert not res and res.reason == "edge-count"

    def test_unknown_edge(self, fig3_graph):
        t = kruskal(fig3_graph)
        swapped = SpanningTree(6, t.edges[:-1] + (Edge(0, 5),), t.total_weight)
        res = verify_spanning_tree(fig3_graph, swapped)
        assert not res and res.reason == "unknown-edge"

    def test_cycle(self):
        g = build_graph(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1)])
        bad = SpanningTree(4, (Edge(0, 1), Edge(1, 2), Edge(0, 2)), 3.0)
        res = verify_spanning_tree(g, bad)
        assert not res and res.reason == "cycle"

    def test_weight_mismatch(self, fig3_graph):
        t = kruskal(fig3_graph)
        res = verify_spanning_tree(fig3_graph, SpanningTree(6, t.edges, t.total_weight + 1))
        assert not res and res.reason == "weight-mismatch"

    def test_node_count(self, fig3_graph):
        res = verify_spanning_tree(fig3_graph, SpanningTree(5, (), 0.0))
        assert not res and res.reason == "node-count"


class TestTreeFiles:
    def test_round_trip(self, tmp_path, fig3_graph):
        t = kruskal(fig3_graph)
        path = tmp_path / "t.txt"
        write_tree(t, fig3_graph, path)
        t2 = read_tree(path)
        assert edge_set(t2) == edge_set(t)
        assert t2.total_weight == t.total_weight
        assert verify_spanning_tree(fig3_graph, t2)

    def test_rejects_plain_graph_file(self, tmp_path, fig3_graph):
        from sfmst.graph import FileFormatError, write_graph

        path = tmp_path / "g.txt"
        write_graph(fig3_graph, path)
        with pytest.raises(FileFormatError):
            read_tree(path)
