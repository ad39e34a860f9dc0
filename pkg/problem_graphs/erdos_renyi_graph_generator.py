import networkx as nx
import numpy as np

from problem_graphs.graph_generator import GraphGenerator, make_rng
from problem_graphs.problem_graph import ProblemGraph


def edges_for_density(n: int, target_density: float) -> int:
    """Edge count closest to a density under the 2M/(N(N-1)) convention."""
    return int(round(target_density * n * (n - 1) / 2))


def _sample_er(n: int, m: int, rng: np.random.Generator) -> ProblemGraph:
    max_edges = n * (n - 1) // 2
    if m < 0 or m > max_edges:
        raise ValueError(f"Edge count must be in [0, {max_edges}] for n={n}, got {m}")

    graph = nx.gnm_random_graph(n, m, seed=rng)
    return ProblemGraph.from_pairs(n, graph.edges())


def gen_er(n: int, m: int, seed: int) -> ProblemGraph:
    """Uniform random graph with exactly m edges drawn without replacement."""
    if n < 0:
        raise ValueError(f"Vertex count must be non-negative, got {n}")
    return _sample_er(n, m, make_rng(seed))


class ErdosRenyiGraphGenerator(GraphGenerator):
    """Erdos-Renyi G(n, m) graphs, sized by edge count or density."""

    aliases = ("er",)

    def _validate_params(self) -> None:
        unknown = set(self._params) - {"edges", "density"}
        if unknown:
            raise ValueError(f"Unknown ER parameters: {', '.join(sorted(unknown))}")

        has_edges = self._params.get("edges") is not None
        has_density = self._params.get("density") is not None
        if has_edges == has_density:
            raise ValueError("ER graphs need exactly one of 'edges' or 'density'")

        if has_density and not 0 <= float(self._params["density"]) <= 1:
            raise ValueError(f"Density must be in [0, 1], got {self._params['density']}")
        if has_edges and int(self._params["edges"]) < 0:
            raise ValueError(f"Edge count must be non-negative, got {self._params['edges']}")

    def edge_count(self, size: int) -> int:
        """Get the edge count used at a given size."""
        if self._params.get("edges") is not None:
            return int(self._params["edges"])
        return edges_for_density(size, float(self._params["density"]))

    def check_size(self, size: int) -> None:
        super().check_size(size)
        if self.edge_count(size) > size * (size - 1) // 2:
            raise ValueError(
                f"{self.edge_count(size)} edges do not fit on {size} vertices"
            )

    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        return _sample_er(size, self.edge_count(size), rng)
