from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import networkx as nx
import numpy as np

Pair = tuple[int, int]


class CouplingMapParseError(ValueError):
    """Malformed coupling-map text, with the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class CouplingMap:
    """Physical qubits, point-to-point couplers and shared buses."""

    n: int
    edges: frozenset[Pair]
    buses: tuple[frozenset[int], ...] = ()
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Coupling map needs at least one qubit, got {self.n}")

        for a, b in self.edges:
            if a >= b:
                raise ValueError(f"Edge ({a}, {b}) must be stored as (min, max)")
            if a < 0 or b >= self.n:
                raise ValueError(f"Edge ({a}, {b}) out of range for {self.n} qubits")

        seen: set[int] = set()
        for index, bus in enumerate(self.buses):
            if len(bus) < 2:
                raise ValueError(f"Bus {index} needs at least two qubits")
            if any(q < 0 or q >= self.n for q in bus):
                raise ValueError(f"Bus {index} references a qubit outside 0..{self.n - 1}")
            if seen & bus:
                raise ValueError(f"Bus {index} overlaps another bus")
            seen |= bus

        for a, b in self.edges:
            bus = self._bus_index.get(a)
            if bus is not None and bus == self._bus_index.get(b):
                raise ValueError(f"Edge ({a}, {b}) duplicates a bus coupling")

    @classmethod
    def from_pairs(cls, n: int, pairs, buses=(), name: str = "custom") -> "CouplingMap":
        return cls(
            n=n,
            edges=frozenset(_pair(int(a), int(b)) for a, b in pairs),
            buses=tuple(frozenset(int(q) for q in bus) for bus in buses),
            name=name,
        )

    @cached_property
    def _bus_index(self) -> dict[int, int]:
        return {q: index for index, bus in enumerate(self.buses) for q in bus}

    @cached_property
    def graph(self) -> nx.Graph:
        """Connectivity graph with every bus expanded into a clique."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(sorted(self.edges))
        for bus in self.buses:
            graph.add_edges_from(combinations(sorted(bus), 2))
        return graph

    @cached_property
    def coupled_pairs(self) -> frozenset[Pair]:
        """Get every coupled pair, bus members included, as sorted tuples."""
        return frozenset(_pair(a, b) for a, b in self.graph.edges)

    def coupled(self, a: int, b: int) -> bool:
        """Check if two physical qubits can share a two-qubit gate."""
        return a != b and _pair(a, b) in self.coupled_pairs

    def bus_of_pair(self, a: int, b: int) -> int | None:
        """Index of the bus a pair is coupled through, or None for edges and uncoupled pairs."""
        if _pair(a, b) in self.edges:
            return None
        bus = self._bus_index.get(a)
        if bus is not None and bus == self._bus_index.get(b):
            return bus
        return None

    def neighbors(self, q: int) -> list[int]:
        """Get the sorted neighbours of a qubit."""
        return sorted(self.graph.neighbors(q))

    def max_degree(self) -> int:
        return max((d for _, d in self.graph.degree), default=0)

    def is_connected(self) -> bool:
        return nx.is_connected(self.graph)

    @cached_property
    def _distances(self) -> np.ndarray:
        matrix = np.full((self.n, self.n), np.inf)
        for source, lengths in nx.all_pairs_shortest_path_length(self.graph):
            for target, length in lengths.items():
                matrix[source, target] = length
        matrix.setflags(write=False)
        return matrix

    def distances(self) -> np.ndarray:
        """All-pairs hop counts, buses counted as cliques; inf when unreachable."""
        return self._distances

    def to_text(self) -> str:
        """Serialize to the n/edge/bus text format read by parse_coupling_map."""
        lines = [f"n {self.n}"]
        lines.extend(f"edge {a} {b}" for a, b in sorted(self.edges))
        lines.extend("bus " + " ".join(str(q) for q in sorted(bus)) for bus in self.buses)
        return "\n".join(lines) + "\n"


def avg_connectivity(cmap: CouplingMap) -> float:
    """Average coupled pairs per qubit: 2 * |coupled pairs| / n."""
    return 2 * len(cmap.coupled_pairs) / cmap.n


def distances(cmap: CouplingMap) -> np.ndarray:
    return cmap.distances()


def parse_coupling_map(text: str, name: str = "custom") -> CouplingMap:
    """Parse the `n` / `edge i j` / `bus i1 ... ik` text format."""
    n: int | None = None
    edges: dict[Pair, int] = {}
    buses: list[list[int]] = []
    bus_of: dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *rest = line.split()
        try:
            values = [int(token) for token in rest]
        except ValueError as e:
            raise CouplingMapParseError(line_number, f"invalid integer in {line!r}") from e

        if keyword == "n":
            if n is not None or len(values) != 1:
                raise CouplingMapParseError(line_number, "expected a single 'n <count>' line")
            if values[0] < 1:
                raise CouplingMapParseError(line_number, f"qubit count must be positive, got {values[0]}")
            n = values[0]
            continue
        if keyword not in ("edge", "bus"):
            raise CouplingMapParseError(line_number, f"unknown keyword {keyword!r}")
        if n is None:
            raise CouplingMapParseError(line_number, "missing 'n <count>' line")
        if any(q < 0 or q >= n for q in values):
            raise CouplingMapParseError(line_number, f"qubit out of range for {n} qubits")

        if keyword == "edge":
            if len(values) != 2:
                raise CouplingMapParseError(line_number, "expected 'edge i j'")
            if values[0] == values[1]:
                raise CouplingMapParseError(line_number, f"self-coupling on qubit {values[0]}")
            edges.setdefault(_pair(values[0], values[1]), line_number)
        else:
            if len(set(values)) < 2:
                raise CouplingMapParseError(line_number, "a bus needs at least two qubits")
            if any(q in bus_of for q in values):
                raise CouplingMapParseError(line_number, "bus overlaps another bus")
            bus_of.update((q, len(buses)) for q in values)
            buses.append(values)

    if n is None:
        raise CouplingMapParseError(1, "missing 'n <count>' line")

    for (a, b), line_number in edges.items():
        if a in bus_of and bus_of[a] == bus_of.get(b):
            raise CouplingMapParseError(line_number, f"edge ({a}, {b}) duplicates a bus coupling")

    return CouplingMap.from_pairs(n, edges, buses, name=name)
