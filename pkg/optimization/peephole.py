"""
Local peephole cleanup over per-qubit adjacency.

Two gates are adjacent when the earlier one is the most recent live gate on
every wire of the later one and both act on the same qubit set. Rules:
    - cancellation: [CX(c,t), CX(c,t)] -> [], [SWAP, SWAP] -> []
    - merge: [RZ(a), RZ(b)] -> [RZ(a+b)], same for RX; zero rotations vanish
    - swap absorption:
        [SWAP, CX(c,t)] -> [CX(c,t), CX(t,c)]
        [CX(c,t), SWAP] -> [CX(t,c), CX(c,t)]
        [SWAP, ZZ(a,c,t)] -> [CX(c,t), CX(t,c), RZ(a,t), CX(c,t)]
        [ZZ(a,c,t), SWAP] -> [CX(c,t), RZ(a,t), CX(t,c), CX(c,t)]
Every rule lowers the lowered two-qubit count or the gate count, so the
pass reaches a fixed point.
"""

import logging
import math

from circuits.circuit import Circuit
from circuits.gate import Gate, GateKind

logger = logging.getLogger(__name__)

ANGLE_TOLERANCE = 1e-12


def _is_identity_rotation(gate: Gate) -> bool:
    return (
        gate.kind in (GateKind.RX, GateKind.RZ)
        and abs(math.remainder(gate.angle, 2 * math.pi)) < ANGLE_TOLERANCE
    )


def _combine(first: Gate, second: Gate) -> list[Gate] | None:
    """Replacement for an adjacent pair on the same qubits, or None when no rule applies."""
    match first.kind, second.kind:
        case GateKind.CNOT, GateKind.CNOT if first.qubits == second.qubits:
            return []
        case GateKind.SWAP, GateKind.SWAP:
            return []
        case (GateKind.RZ, GateKind.RZ) | (GateKind.RX, GateKind.RX):
            angle = math.remainder(first.angle + second.angle, 2 * math.pi)
            if abs(angle) < ANGLE_TOLERANCE:
                return []
            return [Gate(first.kind, first.qubits, angle)]
        case GateKind.SWAP, GateKind.CNOT:
            c, t = second.qubits
            return [Gate.cnot(c, t), Gate.cnot(t, c)]
        case GateKind.CNOT, GateKind.SWAP:
            c, t = first.qubits
            return [Gate.cnot(t, c), Gate.cnot(c, t)]
        case GateKind.SWAP, GateKind.ZZ:
            c, t = second.qubits
            return [Gate.cnot(c, t), Gate.cnot(t, c), Gate.rz(second.angle, t), Gate.cnot(c, t)]
        case GateKind.ZZ, GateKind.SWAP:
            c, t = first.qubits
            return [Gate.cnot(c, t), Gate.rz(first.angle, t), Gate.cnot(t, c), Gate.cnot(c, t)]
    return None


class _Pass:
    """One sweep keeping a stack of live gate positions per wire."""

    def __init__(self):
        self.out: list[Gate | None] = []
        self.wires: dict[int, list[int]] = {}
        self.rewrites = 0

    def push(self, gate: Gate) -> None:
        tops = {self.wires[q][-1] if self.wires.get(q) else None for q in gate.qubits}
        if len(tops) == 1 and None not in tops:
            index = tops.pop()
            previous = self.out[index]
            if set(previous.qubits) == set(gate.qubits):
                replacement = _combine(previous, gate)
                if replacement is not None:
                    self.out[index] = None
                    for q in previous.qubits:
                        self.wires[q].pop()
                    self.rewrites += 1
                    for new_gate in replacement:
                        self.push(new_gate)
                    return

        if _is_identity_rotation(gate):
            self.rewrites += 1
            return
        self.out.append(gate)
        for q in gate.qubits:
            self.wires.setdefault(q, []).append(len(self.out) - 1)

    def result(self) -> list[Gate]:
        return [gate for gate in self.out if gate is not None]


def peephole(circuit: Circuit) -> Circuit:
    """Apply the local rewrite rules until nothing changes."""
    gates = list(circuit.gates)
    total = 0
    while True:
        sweep = _Pass()
        for gate in gates:
            sweep.push(gate)
        gates = sweep.result()
        total += sweep.rewrites
        if not sweep.rewrites:
            break

    logger.debug("Peephole applied %d rewrites, %d -> %d gates", total, len(circuit), len(gates))
    return circuit.with_gates(gates)
