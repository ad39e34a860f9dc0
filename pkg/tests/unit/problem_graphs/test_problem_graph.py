import networkx as nx
import pytest

from problem_graphs.problem_graph import (
    EdgeListParseError,
    ProblemGraph,
    density,
    parse_edge_list,
)


class TestProblemGraph:
    def test_from_pairs_normalises_order(self):
        graph = ProblemGraph.from_pairs(3, [(2, 0), (1, 2), (0, 2)])
        assert graph.edges == frozenset({(0, 2), (1, 2)})
        assert graph.m == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="Self-loop"):
            ProblemGraph.from_pairs(3, [(1, 1)])

    def test_rejects_unordered_edge(self):
        with pytest.raises(ValueError, match="min, max"):
            ProblemGraph(n=3, edges=frozenset({(2, 1)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            ProblemGraph.from_pairs(3, [(0, 3)])

    def test_rejects_negative_size(self):
        with pytest.raises(ValueError, match="non-negative"):
            ProblemGraph(n=-1, edges=frozenset())

    def test_degrees(self, triangle_graph):
        assert triangle_graph.degrees().tolist() == [2, 2, 2]

    def test_to_networkx_keeps_isolated_vertices(self):
        graph = ProblemGraph.from_pairs(4, [(0, 1)])
        nx_graph = graph.to_networkx()
        assert nx_graph.number_of_nodes() == 4
        assert nx_graph.number_of_edges() == 1

    def test_is_connected(self, triangle_graph):
        assert triangle_graph.is_connected()
        assert not ProblemGraph.from_pairs(4, [(0, 1), (2, 3)]).is_connected()
        assert not ProblemGraph(n=0, edges=frozenset()).is_connected()

    def test_sorted_edges(self, trail_graph):
        assert list(trail_graph.sorted_edges) == sorted(trail_graph.edges)


class TestDensity:
    def test_complete_graph_is_one(self):
        graph = ProblemGraph.from_pairs(5, nx.complete_graph(5).edges())
        assert density(graph) == 1.0

    def test_three_regular_on_twenty(self):
        graph = ProblemGraph.from_pairs(20, nx.random_regular_graph(3, 20, seed=1).edges())
        assert density(graph) == pytest.approx(3 / 19)

    def test_needs_two_vertices(self):
        with pytest.raises(ValueError, match="at least 2"):
            density(ProblemGraph(n=1, edges=frozenset()))


class TestEdgeListText:
    def test_text_format(self, triangle_graph):
        assert triangle_graph.to_edge_list_text() == "3 3\n0 1\n0 2\n1 2\n"

    def test_parse_round_trip(self, trail_graph):
        assert parse_edge_list(trail_graph.to_edge_list_text()) == trail_graph

    def test_parse_skips_comments(self):
        graph = parse_edge_list("# instance\n2 1\n\n0 1\n")
        assert graph.edges == frozenset({(0, 1)})

    @pytest.mark.parametrize(
        "text, line, message",
        [
            ("", 1, "empty"),
            ("two 1\n0 1\n", 1, "header"),
            ("3 1\n0\n", 2, "expected 'i j'"),
            ("3 1\n1 0\n", 2, "i < j"),
            ("3 2\n0 1\n", 1, "announces 2 edges"),
            ("3 2\n0 1\n0 1\n", 3, "duplicate"),
            ("3 1\n0 x\n", 2, "invalid vertex"),
            ("3 1\n0 3\n", 2, "out of range"),
            ("# instance\n\n4 3\n0 1\n\n# tail\n2 1\n1 2\n", 7, "i < j"),
        ],
    )
    def test_parse_errors(self, text, line, message):
        with pytest.raises(EdgeListParseError, match=message) as excinfo:
            parse_edge_list(text)
        assert excinfo.value.line_number == line

    def test_parse_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            parse_edge_list("3 1\n0\n")
