"""Dense statevector reference simulator for small circuits.

Qubit q is tensor axis q, so basis index bits are read most-significant first.
Rotations follow RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2) and
ZZ(t) = exp(-i t Z(x)Z / 2), which is exactly CNOT . RZ(t) . CNOT.
"""

import numpy as np

from circuits.circuit import Circuit
from circuits.gate import Gate, GateKind

MAX_WIDTH = 16

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)


def _rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def _rz(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)]).astype(np.complex128)


def _zz(theta: float) -> np.ndarray:
    even, odd = np.exp(-0.5j * theta), np.exp(0.5j * theta)
    return np.diag([even, odd, odd, even]).astype(np.complex128)


def gate_matrix(gate: Gate) -> np.ndarray:
    match gate.kind:
        case GateKind.H:
            return _H
        case GateKind.RX:
            return _rx(gate.angle or 0.0)
        case GateKind.RZ:
            return _rz(gate.angle or 0.0)
        case GateKind.CNOT:
            return _CNOT
        case GateKind.SWAP:
            return _SWAP
        case GateKind.ZZ:
            return _zz(gate.angle or 0.0)
    raise ValueError(f"No matrix for {gate.kind}")


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    """Apply a gate to a (2,)*n tensor and return the new tensor."""
    k = len(gate.qubits)
    operator = gate_matrix(gate).reshape((2,) * (2 * k))
    axes = list(gate.qubits)
    moved = np.tensordot(operator, state, axes=(list(range(k, 2 * k)), axes))
    return np.moveaxis(moved, list(range(k)), axes)


def zero_state(width: int) -> np.ndarray:
    if width > MAX_WIDTH:
        raise ValueError(f"Dense simulation is limited to {MAX_WIDTH} qubits, got {width}")
    state = np.zeros((2,) * width, dtype=np.complex128)
    state[(0,) * width] = 1.0
    return state


def simulate(circuit: Circuit, initial: np.ndarray | None = None) -> np.ndarray:
    """Final statevector (flattened) of a circuit started from |0...0> by default."""
    state = zero_state(circuit.width) if initial is None else initial.reshape((2,) * circuit.width)
    for gate in circuit.gates:
        state = apply_gate(state, gate)
    return state.reshape(-1)


def embed_logical_state(
    logical: np.ndarray, width: int, placement: dict[int, int]
) -> np.ndarray:
    """Place a logical state on `width` physical qubits.

    placement maps logical qubit -> physical qubit; unplaced physical qubits are |0>.
    """
    logical_width = int(np.log2(logical.size))
    if len(placement) != logical_width:
        raise ValueError("Placement must cover every logical qubit")

    ancillas = width - logical_width
    tensor = logical.reshape((2,) * logical_width)
    if ancillas:
        zero = np.zeros((2,) * ancillas, dtype=np.complex128)
        zero[(0,) * ancillas] = 1.0
        tensor = np.tensordot(tensor, zero, axes=0)

    used = set(placement.values())
    spare = [p for p in range(width) if p not in used]
    destination = [placement[q] for q in range(logical_width)] + spare
    return np.moveaxis(tensor, list(range(width)), destination).reshape(-1)


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, atol: float = 1e-9) -> bool:
    if a.shape != b.shape:
        return False
    pivot = int(np.argmax(np.abs(b)))
    if abs(b[pivot]) < atol:
        return bool(np.allclose(a, b, atol=atol))
    phase = a[pivot] / b[pivot]
    if not np.isclose(abs(phase), 1.0, atol=atol):
        return False
    return bool(np.allclose(a, phase * b, atol=atol))
