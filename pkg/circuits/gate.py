from dataclasses import dataclass
from enum import Enum
from typing import Optional


class GateKind(Enum):
    """Enumeration of supported gate kinds."""

    # Format: (mnemonic, arity, parametric)
    H = ("h", 1, False)
    RX = ("rx", 1, True)
    RZ = ("rz", 1, True)
    CNOT = ("cnot", 2, False)
    SWAP = ("swap", 2, False)
    ZZ = ("zz", 2, True)

    def __init__(self, mnemonic: str, arity: int, parametric: bool):
        self.mnemonic = mnemonic
        self.arity = arity
        self.parametric = parametric

    @classmethod
    def get_by_mnemonic(cls, mnemonic: str) -> Optional["GateKind"]:
        """Get a gate kind by its lowercase mnemonic."""
        name = mnemonic.lower()
        for kind in cls:
            if kind.mnemonic == name:
                return kind
        return None

    @property
    def is_two_qubit(self) -> bool:
        return self.arity == 2


LOWERED_KINDS = frozenset({GateKind.CNOT, GateKind.RX, GateKind.RZ})


@dataclass(frozen=True)
class Gate:
    """One gate application on 1 or 2 qubits."""

    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if len(self.qubits) != self.kind.arity:
            raise ValueError(
                f"{self.kind.mnemonic} acts on {self.kind.arity} qubit(s), "
                f"got {len(self.qubits)}"
            )
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"Qubit indices must be non-negative, got {self.qubits}")
        if self.kind.arity == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(
                f"{self.kind.mnemonic} operands must differ, got {self.qubits}"
            )
        if self.kind.parametric and self.angle is None:
            raise ValueError(f"{self.kind.mnemonic} needs an angle")
        if not self.kind.parametric and self.angle is not None:
            raise ValueError(f"{self.kind.mnemonic} takes no angle")

    @classmethod
    def h(cls, q: int) -> "Gate":
        return cls(GateKind.H, (q,))

    @classmethod
    def rx(cls, theta: float, q: int) -> "Gate":
        return cls(GateKind.RX, (q,), float(theta))

    @classmethod
    def rz(cls, theta: float, q: int) -> "Gate":
        return cls(GateKind.RZ, (q,), float(theta))

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls(GateKind.SWAP, (a, b))

    @classmethod
    def zz(cls, theta: float, a: int, b: int) -> "Gate":
        return cls(GateKind.ZZ, (a, b), float(theta))

    @property
    def is_two_qubit(self) -> bool:
        return self.kind.is_two_qubit

    def remap(self, mapping) -> "Gate":
        """Return the same gate with every qubit q replaced by mapping[q]."""
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits), self.angle)

    def __str__(self) -> str:
        parts = [self.kind.mnemonic]
        if self.angle is not None:
            parts.append(repr(self.angle))
        parts.extend(str(q) for q in self.qubits)
        return " ".join(parts)
