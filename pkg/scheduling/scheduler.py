import logging
from collections import defaultdict
from dataclasses import dataclass

import networkx as nx

from circuits.circuit import Circuit, depth_2q
from circuits.dag import to_dag
from circuits.gate import Gate
from circuits.lowering import lower
from topologies.coupling_map import CouplingMap

logger = logging.getLogger(__name__)


class ScheduleError(ValueError):
    """Raised when a circuit violates the scheduler's contract or a schedule is inconsistent."""


@dataclass(frozen=True)
class GateDurations:
    """Gate durations in abstract time units."""

    t_1q: int | float = 1
    t_2q: int | float = 10

    def __post_init__(self):
        if self.t_1q <= 0 or self.t_2q <= 0:
            raise ValueError(
                f"Durations must be positive, got t_1q={self.t_1q}, t_2q={self.t_2q}"
            )

    def of(self, gate: Gate) -> int | float:
        return self.t_2q if gate.is_two_qubit else self.t_1q


@dataclass(frozen=True)
class ScheduleResult:
    starts: tuple[int | float, ...]
    ends: tuple[int | float, ...]
    resources: tuple[tuple[str, ...], ...]
    makespan: int | float
    two_q_count: int
    two_q_depth: int

    def dump(self) -> str:
        """One `gate_index start end resources` line per gate."""
        lines = [
            f"{index} {start} {end} {' '.join(used)}"
            for index, (start, end, used) in enumerate(
                zip(self.starts, self.ends, self.resources)
            )
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def schedule(
    circuit: Circuit, cmap: CouplingMap, durations: GateDurations | None = None
) -> ScheduleResult:
    """Greedy list schedule in gate order over qubit and bus resources.

    A gate starts once all of its qubits are free; a two-qubit gate on a pair
    coupled only through a bus also waits for that bus.
    """
    durations = durations or GateDurations()
    if not circuit.is_lowered:
        raise ValueError("Only lowered circuits can be scheduled")
    if circuit.width > cmap.n:
        raise ValueError(f"Circuit width {circuit.width} exceeds {cmap.n} physical qubits")

    free_at: dict[str, int | float] = defaultdict(int)
    starts, ends, resources = [], [], []
    two_q_count = 0

    for index, gate in enumerate(circuit.gates):
        used = [f"q{q}" for q in gate.qubits]
        if gate.is_two_qubit:
            two_q_count += 1
            a, b = gate.qubits
            if not cmap.coupled(a, b):
                raise ScheduleError(f"Gate {index} ({gate}) acts on uncoupled pair ({a}, {b})")
            bus = cmap.bus_of_pair(a, b)
            if bus is not None:
                used.append(f"bus{bus}")

        start = max(free_at[resource] for resource in used)
        end = start + durations.of(gate)
        for resource in used:
            free_at[resource] = end
        starts.append(start)
        ends.append(end)
        resources.append(tuple(used))

    makespan = max(ends, default=0)
    logger.debug("Scheduled %d gates, makespan %s", len(circuit), makespan)
    return ScheduleResult(
        starts=tuple(starts),
        ends=tuple(ends),
        resources=tuple(resources),
        makespan=makespan,
        two_q_count=two_q_count,
        two_q_depth=depth_2q(circuit),
    )


def scaled_time(circuit: Circuit, cmap: CouplingMap) -> int | float:
    """Makespan with 1/10 durations; abstract circuits are lowered first."""
    return schedule(lower(circuit), cmap, GateDurations()).makespan


def critical_path(circuit: Circuit, durations: GateDurations | None = None) -> int | float:
    """Duration-weighted longest path through the dependency DAG."""
    durations = durations or GateDurations()
    graph = to_dag(circuit).as_networkx()
    finish: dict[int, int | float] = {}
    for node in nx.topological_sort(graph):
        ready = max((finish[p] for p in graph.predecessors(node)), default=0)
        finish[node] = ready + durations.of(circuit.gates[node])
    return max(finish.values(), default=0)


def check_schedule(result: ScheduleResult, circuit: Circuit) -> None:
    """Raise ScheduleError if intervals overlap on a resource or break gate order."""
    intervals: dict[str, list[tuple]] = defaultdict(list)
    for start, end, used in zip(result.starts, result.ends, result.resources):
        for resource in used:
            intervals[resource].append((start, end))
    for resource, spans in intervals.items():
        spans.sort()
        for (_, first_end), (second_start, _) in zip(spans, spans[1:]):
            if second_start < first_end:
                raise ScheduleError(f"Overlapping gates on {resource}")

    dag = to_dag(circuit)
    for u, v in dag.edges:
        if result.starts[v] < result.ends[u]:
            raise ScheduleError(f"Gate {v} starts before its predecessor {u} ends")
    if result.makespan != max(result.ends, default=0):
        raise ScheduleError("Makespan differs from the latest gate end")
