from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar

from circuits.circuit import Circuit
from circuits.gate import GateKind
from routers.mapping import Mapping
from topologies.topology import Topology


class RoutingError(RuntimeError):
    """Raised when routing cannot complete or produces an unsound circuit."""


@dataclass(frozen=True)
class RoutingResult:
    """Routed circuit on physical qubits plus the mappings around it."""

    circuit: Circuit
    initial_mapping: Mapping
    final_mapping: Mapping

    @property
    def swap_count(self) -> int:
        return sum(1 for gate in self.circuit.gates if gate.kind is GateKind.SWAP)


class Router(ABC):
    """Abstract base class for routers that map circuits onto a topology."""

    aliases: ClassVar[tuple[str, ...]] = ()

    def __init__(self, seed: int = 0):
        self._seed = seed

    @property
    def seed(self) -> int:
        return self._seed

    def _check_fits(self, circuit: Circuit, topology: Topology) -> None:
        if circuit.width > topology.qubit_count:
            raise ValueError(
                f"Circuit width {circuit.width} exceeds {topology!r} "
                f"with {topology.qubit_count} qubits"
            )

    @abstractmethod
    def route(self, circuit: Circuit, topology: Topology) -> RoutingResult:
        """Route `circuit` onto the topology's coupling map."""
        pass
