from itertools import combinations

import numpy as np

from problem_graphs.graph_generator import GraphGenerator
from problem_graphs.problem_graph import ProblemGraph


def gen_sk(n: int) -> ProblemGraph:
    """Complete graph K_n."""
    if n < 2:
        raise ValueError(f"SK graphs need n >= 2, got {n}")
    return ProblemGraph(n=n, edges=frozenset(combinations(range(n), 2)))


class SherringtonKirkpatrickGraphGenerator(GraphGenerator):
    """Sherrington-Kirkpatrick instances: the complete graph, density 1."""

    aliases = ("sk",)

    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        return gen_sk(size)
