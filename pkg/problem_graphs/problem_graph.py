from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

Edge = tuple[int, int]


class EdgeListParseError(ValueError):
    """Malformed edge-list text, with the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class ProblemGraph:
    """Undirected simple graph describing a 2-local Hamiltonian instance."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.n}")

        for i, j in self.edges:
            if i == j:
                raise ValueError(f"Self-loop on vertex {i} is not allowed")
            if i > j:
                raise ValueError(f"Edge ({i}, {j}) must be stored as (min, max)")
            if i < 0 or j >= self.n:
                raise ValueError(f"Edge ({i}, {j}) out of range for {self.n} vertices")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "ProblemGraph":
        """Build a graph from unordered pairs, normalising each to (min, max)."""
        edges = set()
        for a, b in pairs:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"Self-loop on vertex {a} is not allowed")
            edges.add((min(a, b), max(a, b)))
        return cls(n=n, edges=frozenset(edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degrees(self) -> np.ndarray:
        """Degree of every vertex."""
        degree = np.zeros(self.n, dtype=np.int64)
        for i, j in self.edges:
            degree[i] += 1
            degree[j] += 1
        return degree

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def to_edge_list_text(self) -> str:
        """Serialize as "n m" followed by one "i j" line per edge."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{i} {j}" for i, j in self.sorted_edges)
        return "\n".join(lines) + "\n"


def density(graph: ProblemGraph) -> float:
    """Edge density 2M / (N(N-1)); complete graphs report exactly 1."""
    if graph.n < 2:
        raise ValueError(f"Density needs at least 2 vertices, got {graph.n}")
    return 2 * graph.m / (graph.n * (graph.n - 1))


def parse_edge_list(text: str) -> ProblemGraph:
    """Parse the edge-list text format produced by to_edge_list_text."""
    header: tuple[int, int] | None = None
    header_line = 1
    pairs: list[Edge] = []
    seen: set[Edge] = set()

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header is None:
            try:
                n, m = (int(token) for token in tokens)
            except ValueError as e:
                raise EdgeListParseError(line_number, f"invalid header {line!r}") from e
            if n < 0 or m < 0:
                raise EdgeListParseError(line_number, f"header counts must be non-negative, got {line!r}")
            header, header_line = (n, m), line_number
            continue

        if len(tokens) != 2:
            raise EdgeListParseError(line_number, f"expected 'i j', got {line!r}")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError as e:
            raise EdgeListParseError(line_number, f"invalid vertex index in {line!r}") from e
        if i >= j:
            raise EdgeListParseError(line_number, f"edge must satisfy i < j, got {line!r}")
        if i < 0 or j >= header[0]:
            raise EdgeListParseError(line_number, f"edge out of range for {header[0]} vertices")
        if (i, j) in seen:
            raise EdgeListParseError(line_number, f"duplicate edge {line!r}")
        seen.add((i, j))
        pairs.append((i, j))

    if header is None:
        raise EdgeListParseError(1, "edge list is empty")
    n, m = header
    if len(pairs) != m:
        raise EdgeListParseError(
            header_line, f"header announces {m} edges but {len(pairs)} were listed"
        )
    return ProblemGraph.from_pairs(n, pairs)
