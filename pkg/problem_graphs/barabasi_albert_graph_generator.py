import math

import networkx as nx
import numpy as np

from problem_graphs.graph_generator import GraphGenerator, make_rng
from problem_graphs.problem_graph import ProblemGraph


def ba_shape(n: int) -> tuple[int, int, int]:
    """(star nodes, attached nodes, edges per attached node) for size n."""
    star_nodes = math.ceil(n / 4 + 1)
    attached_nodes = math.ceil(3 * n / 4 - 1)
    edges_per_node = math.ceil(n / 4)
    return star_nodes, attached_nodes, edges_per_node


def _sample_ba(n: int, rng: np.random.Generator) -> ProblemGraph:
    if n < 4:
        raise ValueError(f"Barabasi-Albert graphs need n >= 4, got {n}")

    star_nodes, attached_nodes, edges_per_node = ba_shape(n)
    total = star_nodes + attached_nodes
    graph = nx.barabasi_albert_graph(
        total,
        edges_per_node,
        seed=rng,
        initial_graph=nx.star_graph(star_nodes - 1),
    )
    return ProblemGraph.from_pairs(total, graph.edges())


def gen_ba(n: int, seed: int) -> ProblemGraph:
    """Preferential attachment grown from a star on ceil(n/4+1) nodes."""
    return _sample_ba(n, make_rng(seed))


class BarabasiAlbertGraphGenerator(GraphGenerator):
    """Barabasi-Albert preferential-attachment graphs seeded from a star."""

    aliases = ("ba",)
    min_size = 4

    def node_count(self, size: int) -> int:
        star_nodes, attached_nodes, _ = ba_shape(size)
        return star_nodes + attached_nodes

    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        return _sample_ba(size, rng)
