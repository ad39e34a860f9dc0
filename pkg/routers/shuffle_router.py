import logging
from collections import Counter
from collections.abc import Sequence

from circuits.circuit import Circuit, CircuitLevel
from circuits.gate import Gate
from circuits.qaoa import qaoa_blocks
from routers.mapping import Mapping
from routers.router import Router, RoutingError, RoutingResult
from routers.swap_strategy import SwapStrategy, strategy_for_topology
from topologies.coupling_map import CouplingMap
from topologies.topology import Topology

logger = logging.getLogger(__name__)


def interaction_levels(gates: Sequence[Gate]) -> int:
    """Number of dependency levels when the gates run in the given order."""
    level: dict[int, int] = {}
    depth = 0
    for gate in gates:
        start = max((level.get(q, 0) for q in gate.qubits), default=0) + 1
        for q in gate.qubits:
            level[q] = start
        depth = max(depth, start)
    return depth


def commutation_order(gates: Sequence[Gate]) -> list[Gate]:
    """Reorder mutually commuting two-qubit gates into few parallel levels.

    Greedy matching rounds take gates whose endpoints still have the most pending
    interactions first; the input order is kept when it is already as shallow.
    """
    remaining = list(gates)
    pending = Counter(q for gate in remaining for q in gate.qubits)
    ordered: list[Gate] = []

    while remaining:
        ranked = sorted(remaining, key=lambda g: -sum(pending[q] for q in g.qubits))
        busy: set[int] = set()
        chosen: list[Gate] = []
        for gate in ranked:
            if busy.isdisjoint(gate.qubits):
                chosen.append(gate)
                busy.update(gate.qubits)
        for gate in chosen:
            pending.subtract(gate.qubits)
            remaining.remove(gate)
        ordered.extend(chosen)

    if interaction_levels(ordered) < interaction_levels(gates):
        return ordered
    return list(gates)


def route_shuffle(
    circuit: Circuit, cmap: CouplingMap, strategy: SwapStrategy
) -> RoutingResult:
    """Apply every ZZ term as soon as its qubits are coupled, then advance one swap layer."""
    if strategy.coupling_map != cmap:
        raise ValueError(f"Strategy {strategy.name} was built for a different coupling map")
    if circuit.width > cmap.n:
        raise ValueError(f"Circuit width {circuit.width} exceeds {cmap.n} physical qubits")
    if circuit.level is not CircuitLevel.ABSTRACT:
        raise ValueError("Shuffle routing expects an abstract QAOA circuit")

    prefix, block, suffix = qaoa_blocks(circuit)
    mapping = Mapping.identity(cmap.n)
    initial = mapping.copy()
    routed = [gate.remap(mapping.physical_of()) for gate in prefix]
    pending = list(block)
    applied = 0

    while True:
        placed = mapping.physical_of()
        ready = [g for g in pending if cmap.coupled(*(placed[q] for q in g.qubits))]
        if ready:
            routed.extend(commutation_order([g.remap(placed) for g in ready]))
            ready_ids = {id(g) for g in ready}
            pending = [g for g in pending if id(g) not in ready_ids]
        if not pending:
            break
        if not strategy.layers or applied >= strategy.horizon:
            raise RoutingError(
                f"{len(pending)} interactions left after {applied} layers of {strategy.name}"
            )

        layer = strategy.layer(applied)
        for p, q in layer.pairs:
            routed.append(Gate.swap(p, q))
            mapping.swap(p, q)
        applied += 1
        logger.debug("Layer %d applied, %d interactions pending", applied, len(pending))

    routed.extend(gate.remap(mapping.physical_of()) for gate in suffix)
    logger.debug("Shuffle routing used %d swap layers on %s", applied, strategy.name)
    return RoutingResult(
        circuit=Circuit(cmap.n, tuple(routed), CircuitLevel.ABSTRACT),
        initial_mapping=initial,
        final_mapping=mapping,
    )


class ShuffleRouter(Router):
    """Deterministic full-shuffle routing with commutation-aware ZZ placement."""

    aliases = ("full-shuffle",)

    def route(self, circuit: Circuit, topology: Topology) -> RoutingResult:
        self._check_fits(circuit, topology)
        if not topology.supports_shuffle:
            raise ValueError(f"No full-shuffle strategy is defined for {topology!r}")
        return route_shuffle(circuit, topology.coupling_map, strategy_for_topology(topology))
