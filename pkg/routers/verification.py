from collections import Counter

from circuits.circuit import Circuit
from circuits.gate import GateKind
from routers.mapping import Mapping
from routers.router import RoutingError, RoutingResult
from topologies.coupling_map import CouplingMap

LedgerKey = tuple[str, tuple[int, ...], float | None]


def interaction_ledger(
    circuit: Circuit, initial: Mapping | None = None
) -> tuple[Counter[LedgerKey], Mapping]:
    """Multiset of gate applications in logical terms, replaying SWAPs on the mapping.

    Returns the ledger and the mapping after the last gate. ZZ operands are
    unordered, so they are recorded sorted.
    """
    mapping = (initial or Mapping.identity(circuit.width)).copy()
    ledger: Counter[LedgerKey] = Counter()
    for gate in circuit.gates:
        if gate.kind is GateKind.SWAP:
            mapping.swap(*gate.qubits)
            continue
        logical = tuple(mapping.logical(p) for p in gate.qubits)
        if gate.kind is GateKind.ZZ:
            logical = tuple(sorted(logical))
        ledger[(gate.kind.mnemonic, logical, gate.angle)] += 1
    return ledger, mapping


def check_routing(original: Circuit, result: RoutingResult, cmap: CouplingMap) -> None:
    """Raise RoutingError unless the routed circuit is coupled and preserves every interaction."""
    for index, gate in enumerate(result.circuit.gates):
        if gate.is_two_qubit and not cmap.coupled(*gate.qubits):
            raise RoutingError(f"Routed gate {index} ({gate}) acts on an uncoupled pair")

    expected, _ = interaction_ledger(original)
    actual, final = interaction_ledger(result.circuit, result.initial_mapping)
    if actual != expected:
        missing = expected - actual
        extra = actual - expected
        raise RoutingError(
            f"Interaction ledger mismatch: {sum(missing.values())} missing, "
            f"{sum(extra.values())} unexpected"
        )
    if final != result.final_mapping:
        raise RoutingError("Replayed swaps do not reproduce the reported final mapping")
