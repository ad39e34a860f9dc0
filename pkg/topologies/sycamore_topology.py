import networkx as nx

from topologies.coupling_map import CouplingMap
from topologies.topology import Topology

LATTICE_HEIGHT = 12

# qubit count -> (width, height) of the checkerboard box
SHAPES = {
    18: (6, 6),
    23: (9, 5),
    36: (12, 6),
    54: (12, 9),
    72: (12, 12),
}


def _lattice(width: int, height: int) -> nx.Graph:
    """Checkerboard points (x + y even) coupled to their diagonal neighbours."""
    graph = nx.Graph()
    points = sorted((x, y) for x in range(width) for y in range(height) if (x + y) % 2 == 0)
    graph.add_nodes_from(points)
    for x, y in points:
        for dy in (-1, 1):
            neighbour = (x + 1, y + dy)
            if neighbour[0] < width and 0 <= neighbour[1] < height:
                graph.add_edge((x, y), neighbour)
    return graph


def _points_for(qubits: int) -> tuple[nx.Graph, list[tuple[int, int]]]:
    if qubits in SHAPES:
        graph = _lattice(*SHAPES[qubits])
        return graph, sorted(graph.nodes)

    columns = -(-qubits // (LATTICE_HEIGHT // 2)) + 1
    graph = _lattice(columns, LATTICE_HEIGHT)
    order = [(0, 0)] + [v for _, v in nx.bfs_edges(graph, (0, 0), sort_neighbors=sorted)]
    return graph, sorted(order[:qubits])


def build_sycamore(qubits: int = 72) -> CouplingMap:
    """Diagonal square lattice; other sizes are connected crops of a 12-high lattice."""
    if qubits < 1:
        raise ValueError(f"Sycamore needs at least one qubit, got {qubits}")

    graph, points = _points_for(qubits)
    index = {point: i for i, point in enumerate(points)}
    pairs = [(index[a], index[b]) for a, b in graph.subgraph(points).edges]
    return CouplingMap.from_pairs(len(points), pairs, name=f"sycamore-{qubits}")


class SycamoreTopology(Topology):
    """Google Sycamore/Bristlecone-style diagonal lattice."""

    parameters = {"qubits": 72}
    aliases = ("bristlecone",)

    def _build(self) -> CouplingMap:
        return build_sycamore(self._params["qubits"])

    @classmethod
    def for_width(cls, width: int) -> "SycamoreTopology":
        return cls(qubits=max(1, width))
