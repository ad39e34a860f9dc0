from dataclasses import dataclass

from circuits.circuit import Circuit, CircuitLevel
from circuits.gate import Gate, GateKind
from problem_graphs.problem_graph import ProblemGraph


@dataclass(frozen=True)
class QaoaParams:
    """Angles of a single-layer max-cut ansatz."""

    gamma: float = 0.4
    beta: float = 0.7
    p: int = 1

    def __post_init__(self):
        if self.p != 1:
            raise ValueError(f"Only p=1 circuits are supported, got p={self.p}")


def build_qaoa(graph: ProblemGraph, params: QaoaParams | None = None) -> Circuit:
    """H on every qubit, ZZ(2*gamma) per sorted edge, then RX(2*beta) on every qubit."""
    params = params or QaoaParams()
    if graph.n < 2:
        raise ValueError(f"QAOA circuits need at least 2 qubits, got {graph.n}")

    gates = [Gate.h(q) for q in range(graph.n)]
    gates.extend(Gate.zz(2 * params.gamma, i, j) for i, j in graph.sorted_edges)
    gates.extend(Gate.rx(2 * params.beta, q) for q in range(graph.n))
    return Circuit(width=graph.n, gates=tuple(gates), level=CircuitLevel.ABSTRACT)


def qaoa_blocks(circuit: Circuit) -> tuple[list[Gate], list[Gate], list[Gate]]:
    """Split a QAOA-form circuit into (1q prefix, ZZ block, 1q suffix)."""
    gates = list(circuit.gates)
    start = 0
    while start < len(gates) and not gates[start].is_two_qubit:
        start += 1
    end = start
    while end < len(gates) and gates[end].is_two_qubit:
        end += 1

    prefix, block, suffix = gates[:start], gates[start:end], gates[end:]
    if any(gate.is_two_qubit for gate in suffix):
        raise ValueError("Circuit is not in QAOA form: two-qubit gates after the mixer")
    if any(gate.kind is not GateKind.ZZ for gate in block):
        raise ValueError("Circuit is not in QAOA form: entangling block must be ZZ only")
    return prefix, block, suffix
