from dataclasses import dataclass

import networkx as nx

from circuits.circuit import Circuit


@dataclass(frozen=True)
class DepDag:
    """Gate dependency DAG: u -> v when v is the next gate after u on a shared qubit."""

    size: int
    predecessors: tuple[tuple[int, ...], ...]
    successors: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.size) for v in self.successors[u]]

    def roots(self) -> list[int]:
        """Get the gates with no predecessor."""
        return [node for node in range(self.size) if not self.predecessors[node]]

    def as_networkx(self) -> nx.DiGraph:
        """Return a copy as a networkx DiGraph over gate indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.edges)
        return graph


def to_dag(circuit: Circuit) -> DepDag:
    """Chain every gate to the last earlier gate on each of its qubits."""
    last_on_qubit: dict[int, int] = {}
    predecessors: list[list[int]] = [[] for _ in circuit.gates]
    successors: list[list[int]] = [[] for _ in circuit.gates]

    for index, gate in enumerate(circuit.gates):
        for q in gate.qubits:
            previous = last_on_qubit.get(q)
            if previous is not None and previous not in predecessors[index]:
                predecessors[index].append(previous)
                successors[previous].append(index)
            last_on_qubit[q] = index

    return DepDag(
        size=len(circuit.gates),
        predecessors=tuple(tuple(sorted(p)) for p in predecessors),
        successors=tuple(tuple(sorted(s)) for s in successors),
    )
