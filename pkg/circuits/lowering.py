import math

from circuits.circuit import Circuit, CircuitLevel
from circuits.gate import Gate, GateKind


def lower_gate(gate: Gate) -> list[Gate]:
    """Expand one gate into the CNOT + RX + RZ gateset."""
    match gate.kind:
        case GateKind.H:
            (q,) = gate.qubits
            return [Gate.rz(math.pi / 2, q), Gate.rx(math.pi / 2, q), Gate.rz(math.pi / 2, q)]
        case GateKind.ZZ:
            a, b = gate.qubits
            assert gate.angle is not None
            return [Gate.cnot(a, b), Gate.rz(gate.angle, b), Gate.cnot(a, b)]
        case GateKind.SWAP:
            a, b = gate.qubits
            return [Gate.cnot(a, b), Gate.cnot(b, a), Gate.cnot(a, b)]
        case _:
            return [gate]


def lower(circuit: Circuit) -> Circuit:
    """Rewrite an abstract circuit into a lowered one; lowered input is returned as is."""
    if circuit.is_lowered:
        return circuit

    gates = [lowered for gate in circuit.gates for lowered in lower_gate(gate)]
    return Circuit(width=circuit.width, gates=tuple(gates), level=CircuitLevel.LOWERED)
