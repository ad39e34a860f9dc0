import logging

import networkx as nx
import numpy as np

from problem_graphs.graph_generator import (
    GraphGenerationError,
    GraphGenerator,
    make_rng,
)
from problem_graphs.problem_graph import ProblemGraph

logger = logging.getLogger(__name__)

MAX_ATTEMPTS = 1000


def _sample_regular(n: int, d: int, rng: np.random.Generator) -> ProblemGraph:
    if d < 1:
        raise ValueError(f"Degree must be positive, got {d}")
    if d >= n:
        raise ValueError(f"Degree must be smaller than vertex count, got d={d}, n={n}")
    if (n * d) % 2:
        raise ValueError(f"n * d must be even, got n={n}, d={d}")

    for attempt in range(1, MAX_ATTEMPTS + 1):
        graph = nx.random_regular_graph(d, n, seed=rng)
        if nx.is_connected(graph):
            return ProblemGraph.from_pairs(n, graph.edges())
        logger.debug("Disconnected instance on attempt %d (n=%d, d=%d)", attempt, n, d)

    raise GraphGenerationError(
        f"No connected {d}-regular graph on {n} vertices after {MAX_ATTEMPTS} attempts"
    )


def gen_regular(n: int, d: int, seed: int) -> ProblemGraph:
    """Connected random d-regular graph from the stub-pairing model."""
    return _sample_regular(n, d, make_rng(seed))


class RegularGraphGenerator(GraphGenerator):
    """Connected random regular graphs (3REG, 12REG)."""

    aliases = ("reg",)
    presets = {"3reg": {"degree": 3}, "12reg": {"degree": 12}}

    def _validate_params(self) -> None:
        unknown = set(self._params) - {"degree"}
        if unknown:
            raise ValueError(f"Unknown regular-graph parameters: {', '.join(sorted(unknown))}")
        if "degree" not in self._params:
            raise ValueError("Regular graphs need a 'degree' parameter")
        if int(self._params["degree"]) < 1:
            raise ValueError(f"Degree must be positive, got {self._params['degree']}")

    @property
    def degree(self) -> int:
        """Get the vertex degree of generated graphs."""
        return int(self._params["degree"])

    def check_size(self, size: int) -> None:
        super().check_size(size)
        if self.degree >= size or (size * self.degree) % 2:
            raise ValueError(f"No {self.degree}-regular graph exists on {size} vertices")

    def _generate(self, size: int, rng: np.random.Generator) -> ProblemGraph:
        return _sample_regular(size, self.degree, rng)
