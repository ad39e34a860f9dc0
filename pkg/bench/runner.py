import csv
import logging
import time
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from functools import lru_cache
from typing import IO

import numpy as np

from bench.run_config import RunConfig
from circuits.lowering import lower
from circuits.qaoa import build_qaoa
from cli.factories import GraphFamilyFactory, RouterFactory, TopologyFactory
from optimization.peephole import peephole
from routers.verification import check_routing
from scheduling.scheduler import check_schedule, schedule
from topologies.complete_topology import build_complete
from topologies.topology import Topology

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "family",
    "size",
    "topology",
    "router",
    "instance",
    "two_q_count",
    "two_q_depth",
    "scaled_time",
    "router_ms",
)
METRICS = ("two_q_count", "two_q_depth", "scaled_time", "router_ms")


@dataclass(frozen=True)
class InstanceRow:
    family: str
    size: int
    topology: str
    router: str
    instance: int
    two_q_count: int
    two_q_depth: int
    scaled_time: int | float
    router_ms: float | None = None

    def as_csv_row(self) -> dict[str, object]:
        row = {column: getattr(self, column) for column in CSV_COLUMNS}
        row["router_ms"] = "" if self.router_ms is None else f"{self.router_ms:.3f}"
        return row


@dataclass(frozen=True)
class MetricSummary:
    mean: float
    std: float


@dataclass(frozen=True)
class BenchRecord:
    """Per-instance rows of one size plus their aggregate."""

    config: RunConfig
    size: int
    rows: tuple[InstanceRow, ...]
    summary: dict[str, MetricSummary]


def summarize(values: Sequence[float]) -> MetricSummary:
    """Mean and population standard deviation."""
    if not len(values):
        raise ValueError("Cannot summarize an empty sample")
    data = np.asarray(values, dtype=float)
    return MetricSummary(mean=float(np.mean(data)), std=float(np.std(data, ddof=0)))


def aggregate(rows: Sequence[InstanceRow]) -> dict[str, MetricSummary]:
    """Mean and population std per metric; router_ms only when every row was timed."""
    if not rows:
        raise ValueError("Cannot aggregate zero rows")
    summary = {}
    for metric in METRICS:
        values = [getattr(row, metric) for row in rows]
        if any(value is None for value in values):
            continue
        summary[metric] = summarize(values)
    return summary


@lru_cache(maxsize=1)
def _factories() -> tuple[GraphFamilyFactory, TopologyFactory, RouterFactory]:
    return GraphFamilyFactory(), TopologyFactory(), RouterFactory()


def resolve_topology(config: RunConfig, width: int) -> Topology:
    _, topologies, _ = _factories()
    if config.topology_params:
        return topologies.create(config.topology, **config.topology_params)
    return topologies.for_width(config.topology, width)


def run_instance(config: RunConfig, size: int, instance: int) -> InstanceRow:
    """Generate, build, route, verify, optimize, lower and schedule one instance."""
    graphs, _, routers = _factories()
    seed = config.base_seed + instance
    graph = graphs.create(config.family, **config.family_params).generate(size, seed)
    circuit = build_qaoa(graph, config.qaoa)
    router_ms = None

    if config.is_baseline:
        cmap = build_complete(graph.n)
        compiled = circuit
    else:
        topology = resolve_topology(config, graph.n)
        cmap = topology.coupling_map
        router = routers.create(config.router, seed=seed, params=config.router_params)
        started = time.perf_counter()
        result = router.route(circuit, topology)
        elapsed = time.perf_counter() - started
        check_routing(circuit, result, cmap)
        compiled = peephole(result.circuit) if config.optimize else result.circuit
        if config.timing:
            router_ms = elapsed * 1000

    lowered = lower(compiled)
    timed = schedule(lowered, cmap, config.durations)
    check_schedule(timed, lowered)
    return InstanceRow(
        family=config.family,
        size=size,
        topology=config.topology,
        router=config.router,
        instance=instance,
        two_q_count=timed.two_q_count,
        two_q_depth=timed.two_q_depth,
        scaled_time=timed.makespan,
        router_ms=router_ms,
    )


def _run_size(
    config: RunConfig,
    size: int,
    workers: int,
    on_instance: Callable[[InstanceRow], None] | None,
) -> list[InstanceRow]:
    rows: list[InstanceRow] = []
    if workers <= 1:
        for instance in range(config.instances):
            rows.append(run_instance(config, size, instance))
            if on_instance:
                on_instance(rows[-1])
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(run_instance, config, size, instance)
                for instance in range(config.instances)
            ]
            for future in as_completed(futures):
                rows.append(future.result())
                if on_instance:
                    on_instance(rows[-1])
    return sorted(rows, key=lambda row: row.instance)


def run(
    config: RunConfig,
    workers: int = 1,
    on_instance: Callable[[InstanceRow], None] | None = None,
) -> Iterator[BenchRecord]:
    """Yield one record per size; the config is validated before any work."""
    config.validate()
    for size in config.sizes:
        logger.info(
            "Running %d %s instances of size %d on %s with %s",
            config.instances,
            config.family,
            size,
            config.topology,
            config.router,
        )
        rows = _run_size(config, size, workers, on_instance)
        yield BenchRecord(config=config, size=size, rows=tuple(rows), summary=aggregate(rows))


def write_csv(records: Sequence[BenchRecord], out: IO[str]) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerows(row.as_csv_row() for row in record.rows)
