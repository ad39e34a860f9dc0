import networkx as nx
import numpy as np

from problem_graphs.graph_generator import GraphGenerator, make_rng
from problem_graphs.problem_graph import ProblemGraph

RING_NEIGHBOURS = 4
REWIRE_PROBABILITY = 0.5


def _sample_ws(n: int, rng: np.random.Generator) -> ProblemGraph:
    if n <= RING_NEIGHBOURS:
        raise ValueError(f"Watts-Strogatz graphs need n > {RING_NEIGHBOURS}, got {n}")

    graph = nx.watts_strogatz_graph(n, RING_NEIGHBOURS, REWIRE_PROBABILITY, seed=rng)
    return ProblemGraph.from_pairs(n, graph.edges())


def gen_ws(n: int, seed: int) -> ProblemGraph:
    """Ring lattice with k=4 neighbours, each edge rewired with probability 1/2."""
    return _sample_ws(n, make_rng(seed))


class WattsStrogatzGraphGenerator(GraphGenerator):
    """Watts-Strogatz small-world graphs with k=4 and p=1/2."""

    aliases = ("ws",)
    min_size = RING_NEIGHBOURS + 1

    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        return _sample_ws(size, rng)
