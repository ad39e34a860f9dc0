from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from circuits.gate import LOWERED_KINDS, Gate, GateKind


class CircuitLevel(Enum):
    """Abstraction level of a circuit."""

    ABSTRACT = "abstract"
    LOWERED = "lowered"


# CNOT cost of each two-qubit kind once lowered
LOWERED_2Q_COST = {GateKind.CNOT: 1, GateKind.ZZ: 2, GateKind.SWAP: 3}


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over `width` qubits."""

    width: int
    gates: tuple[Gate, ...] = ()
    level: CircuitLevel = CircuitLevel.ABSTRACT

    def __post_init__(self):
        if self.width < 0:
            raise ValueError(f"Circuit width must be non-negative, got {self.width}")
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))

        for index, gate in enumerate(self.gates):
            if any(q >= self.width for q in gate.qubits):
                raise ValueError(
                    f"Gate {index} ({gate}) uses a qubit outside width {self.width}"
                )
            if self.level is CircuitLevel.LOWERED and gate.kind not in LOWERED_KINDS:
                raise ValueError(
                    f"Lowered circuits allow only cnot/rx/rz, gate {index} is {gate}"
                )

    @classmethod
    def from_gates(
        cls,
        width: int,
        gates: Iterable[Gate],
        level: CircuitLevel = CircuitLevel.ABSTRACT,
    ) -> "Circuit":
        return cls(width=width, gates=tuple(gates), level=level)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    @property
    def is_lowered(self) -> bool:
        return self.level is CircuitLevel.LOWERED

    def two_qubit_gates(self) -> list[Gate]:
        """Get the two-qubit gates in program order."""
        return [gate for gate in self.gates if gate.is_two_qubit]

    def reversed(self) -> "Circuit":
        """Same gates in reverse order; used for mapping searches, not inversion."""
        return Circuit(self.width, tuple(reversed(self.gates)), self.level)

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        """Return a circuit of the same width and level holding `gates`."""
        return Circuit(self.width, tuple(gates), self.level)


def count_2q(circuit: Circuit, lowered: bool = False) -> int:
    """Number of two-qubit gates; with lowered=True, ZZ counts 2 and SWAP 3."""
    if lowered:
        return sum(LOWERED_2Q_COST[g.kind] for g in circuit.gates if g.is_two_qubit)
    return sum(1 for g in circuit.gates if g.is_two_qubit)


def depth_2q(circuit: Circuit) -> int:
    """Longest chain of two-qubit gates in the dependency DAG."""
    level = [0] * circuit.width
    for gate in circuit.gates:
        start = max(level[q] for q in gate.qubits)
        if gate.is_two_qubit:
            start += 1
        for q in gate.qubits:
            level[q] = start
    return max(level, default=0)
