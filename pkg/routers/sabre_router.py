import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from circuits.circuit import Circuit, CircuitLevel
from circuits.dag import DepDag, to_dag
from circuits.gate import Gate
from problem_graphs.graph_generator import make_rng
from routers.mapping import Mapping
from routers.router import Router, RoutingError, RoutingResult
from topologies.coupling_map import CouplingMap, Pair
from topologies.topology import Topology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RouterParams:
    """Lookahead, decay and tie-break settings of the heuristic router."""

    lookahead_size: int = 20
    lookahead_weight: float = 0.5
    decay_increment: float = 0.001
    decay_reset_interval: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.lookahead_size < 1:
            raise ValueError(f"lookahead_size must be >= 1, got {self.lookahead_size}")
        if not 0 < self.lookahead_weight <= 1:
            raise ValueError(
                f"lookahead_weight must be in (0, 1], got {self.lookahead_weight}"
            )
        if self.decay_increment <= 0:
            raise ValueError(f"decay_increment must be positive, got {self.decay_increment}")
        if self.decay_reset_interval < 1:
            raise ValueError(
                f"decay_reset_interval must be >= 1, got {self.decay_reset_interval}"
            )
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


class _SabreRun:
    """State of one routing pass over a dependency DAG."""

    def __init__(
        self, circuit: Circuit, cmap: CouplingMap, params: RouterParams, mapping: Mapping
    ):
        self.gates = circuit.gates
        self.cmap = cmap
        self.params = params
        self.mapping = mapping
        self.dag: DepDag = to_dag(circuit)
        self.dist = cmap.distances()
        self.rng = make_rng(params.seed)
        self.required = [len(p) for p in self.dag.predecessors]
        self.front: set[int] = set(self.dag.roots())
        self.decay = np.ones(cmap.n)
        self.routed: list[Gate] = []
        self.swap_count = 0

    def _coupled_now(self, index: int) -> bool:
        gate = self.gates[index]
        if not gate.is_two_qubit:
            return True
        a, b = gate.qubits
        return self.cmap.coupled(self.mapping.physical(a), self.mapping.physical(b))

    def _execute(self, index: int) -> None:
        self.routed.append(self.gates[index].remap(self.mapping.physical_of()))
        self.front.discard(index)
        for successor in self.dag.successors[index]:
            self.required[successor] -= 1
            if self.required[successor] == 0:
                self.front.add(successor)

    def _swap(self, p: int, q: int) -> None:
        self.routed.append(Gate.swap(p, q))
        self.mapping.swap(p, q)
        self.swap_count += 1

    def _extended_set(self) -> list[int]:
        """Two-qubit gates that become ready as the front layer resolves, up to the lookahead size."""
        limit = self.params.lookahead_size
        extended: list[int] = []
        decremented: list[int] = []
        layer = sorted(self.front)
        while layer and len(extended) < limit:
            next_layer = []
            for node in layer:
                for successor in self.dag.successors[node]:
                    decremented.append(successor)
                    self.required[successor] -= 1
                    if self.required[successor] == 0:
                        next_layer.append(successor)
                        if self.gates[successor].is_two_qubit:
                            extended.append(successor)
                if len(extended) >= limit:
                    break
            layer = next_layer
        for node in decremented:
            self.required[node] += 1
        return extended[:limit]

    def _candidate_swaps(self) -> list[Pair]:
        candidates: set[Pair] = set()
        for index in self.front:
            for logical in self.gates[index].qubits:
                p = self.mapping.physical(logical)
                for neighbor in self.cmap.neighbors(p):
                    candidates.add((min(p, neighbor), max(p, neighbor)))
        return sorted(candidates)

    def _operands(self, indices: list[int]) -> tuple[np.ndarray, np.ndarray]:
        pairs = np.array([self.gates[i].qubits for i in indices], dtype=np.int64)
        pairs = pairs.reshape(-1, 2)
        return pairs[:, 0], pairs[:, 1]

    def _choose_swap(self) -> Pair:
        front_a, front_b = self._operands(sorted(self.front))
        extended = self._extended_set()
        ext_a, ext_b = self._operands(extended)
        weight = self.params.lookahead_weight
        physical = np.array(self.mapping.physical_of())

        candidates = self._candidate_swaps()
        scores = np.empty(len(candidates))
        for k, (p, q) in enumerate(candidates):
            trial = physical.copy()
            lp, lq = self.mapping.logical(p), self.mapping.logical(q)
            trial[lp], trial[lq] = q, p
            cost = self.dist[trial[front_a], trial[front_b]].sum()
            if extended:
                cost += weight * self.dist[trial[ext_a], trial[ext_b]].sum() / len(extended)
            scores[k] = max(self.decay[p], self.decay[q]) * cost

        best = np.flatnonzero(scores == scores.min())
        choice = candidates[int(self.rng.choice(best))]
        logger.debug("Swap %s chosen from %d candidates", choice, len(candidates))
        return choice

    def _release_valve(self) -> None:
        """Walk the operands of the oldest front gate together along a shortest path."""
        index = min(self.front)
        a, b = self.gates[index].qubits
        source, target = self.mapping.physical(a), self.mapping.physical(b)
        try:
            path = nx.shortest_path(self.cmap.graph, source, target)
        except nx.NetworkXNoPath as e:
            raise RoutingError(
                f"Physical qubits {source} and {target} are not connected"
            ) from e
        logger.debug("Release valve routes gate %d along %s", index, path)
        for p, q in zip(path[:-2], path[1:-1]):
            self._swap(p, q)

    def run(self) -> list[Gate]:
        n = self.cmap.n
        stalled = 0
        while self.front:
            ready = [i for i in sorted(self.front) if self._coupled_now(i)]
            if ready:
                self._execute(ready[0])
                stalled = 0
                self.decay[:] = 1
                continue

            if stalled >= n * n:
                raise RoutingError(f"No routing progress after {stalled} swaps")
            if stalled and stalled % n == 0:
                self._release_valve()
                stalled += 1
                continue

            p, q = self._choose_swap()
            self._swap(p, q)
            stalled += 1
            if stalled % self.params.decay_reset_interval == 0:
                self.decay[:] = 1
            else:
                self.decay[p] += self.params.decay_increment
                self.decay[q] += self.params.decay_increment
        return self.routed


def _start_mapping(cmap: CouplingMap, initial: Mapping | None) -> Mapping:
    if initial is None:
        return Mapping.identity(cmap.n)
    if initial.size != cmap.n:
        raise ValueError(f"Initial mapping covers {initial.size} qubits, map has {cmap.n}")
    return initial.copy()


def route_sabre(
    circuit: Circuit,
    cmap: CouplingMap,
    params: RouterParams | None = None,
    initial: Mapping | None = None,
) -> RoutingResult:
    """Insert SWAPs so every two-qubit gate lands on a coupled pair.

    The routed circuit is abstract (it may contain SWAPs) over all physical qubits.
    """
    params = params or RouterParams()
    if circuit.width > cmap.n:
        raise ValueError(f"Circuit width {circuit.width} exceeds {cmap.n} physical qubits")

    start = _start_mapping(cmap, initial)
    run = _SabreRun(circuit, cmap, params, start.copy())
    routed = run.run()
    logger.debug("Heuristic routing inserted %d swaps on %s", run.swap_count, cmap.name)
    return RoutingResult(
        circuit=Circuit(cmap.n, tuple(routed), CircuitLevel.ABSTRACT),
        initial_mapping=start,
        final_mapping=run.mapping,
    )


def initial_mapping(
    circuit: Circuit, cmap: CouplingMap, params: RouterParams | None = None
) -> Mapping:
    """One forward pass from the identity, then one pass over the reversed circuit."""
    params = params or RouterParams()
    forward = route_sabre(circuit, cmap, params)
    backward = route_sabre(circuit.reversed(), cmap, params, forward.final_mapping)
    return backward.final_mapping


class SabreRouter(Router):
    """Lookahead swap insertion with decay, seeded by a reverse-pass initial mapping."""

    def __init__(self, seed: int = 0, params: RouterParams | None = None):
        super().__init__(seed)
        base = params or RouterParams()
        self._params = RouterParams(
            lookahead_size=base.lookahead_size,
            lookahead_weight=base.lookahead_weight,
            decay_increment=base.decay_increment,
            decay_reset_interval=base.decay_reset_interval,
            seed=seed,
        )

    @property
    def params(self) -> RouterParams:
        return self._params

    def route(self, circuit: Circuit, topology: Topology) -> RoutingResult:
        self._check_fits(circuit, topology)
        cmap = topology.coupling_map
        start = initial_mapping(circuit, cmap, self._params)
        return route_sabre(circuit, cmap, self._params, start)
