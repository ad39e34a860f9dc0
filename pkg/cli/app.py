import logging
import os
from dataclasses import replace
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table
from rich.text import Text
from yaspin import yaspin

from bench.run_config import RunConfig
from bench.runner import BenchRecord, run, write_csv
from circuits.circuit import count_2q, depth_2q
from circuits.lowering import lower
from circuits.qaoa import build_qaoa
from circuits.serialization import serialize
from cli.factories import GraphFamilyFactory, RouterFactory, TopologyFactory
from config import Config
from optimization.peephole import peephole
from problem_graphs.problem_graph import parse_edge_list
from routers.swap_strategy import (
    full_connectivity_layers,
    strategy_for_topology,
    swaps_to_full_connectivity,
)
from routers.verification import check_routing
from scheduling.scheduler import check_schedule, schedule
from topologies.coupling_map import avg_connectivity
from topologies.topology import Topology

console = Console()

__version__ = "0.1.0"

BANNER = f"swapbender {__version__}\nQAOA routing and scheduling benchmarks"


class SwapbenderApp:
    """Main CLI application controller."""

    def __init__(self, config: Config | None = None):
        self.config = config or Config()
        self.graph_factory = GraphFamilyFactory()
        self.topology_factory = TopologyFactory()
        self.router_factory = RouterFactory()
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def display_banner():
        console.print(Panel(Text(BANNER, style="bold cyan"), border_style="cyan"))

    def topology(self, name: str, width: int | None = None, **params: Any) -> Topology:
        """Explicit parameters win; otherwise size for `width`, else family defaults."""
        if params or width is None:
            return self.topology_factory.create(name, **params)
        return self.topology_factory.for_width(name, width)

    def topology_text(self, topology: Topology) -> str:
        cmap = topology.coupling_map
        return cmap.to_text() + (
            f"# qubits {cmap.n}, coupled pairs {len(cmap.coupled_pairs)}, "
            f"avg connectivity {avg_connectivity(cmap):.4f}\n"
        )

    def strategy_text(self, topology: Topology) -> str:
        strategy = strategy_for_topology(topology)
        layers = full_connectivity_layers(strategy)
        swaps = swaps_to_full_connectivity(strategy)
        return strategy.dump() + f"# full connectivity after {layers} layers, {swaps} swaps\n"

    def graph_text(self, family: str, size: int, seed: int, **params: Any) -> str:
        generator = self.graph_factory.create(family, **params)
        return generator.generate(size, seed).to_edge_list_text()

    def compile_instance(
        self,
        graph_file: Path,
        topology_name: str,
        router_name: str,
        seed: int = 0,
        optimize: bool = True,
        out: Path | None = None,
        schedule_out: Path | None = None,
    ) -> bool:
        """Route, verify, optimize, lower and schedule one graph; print its metrics."""
        try:
            graph = parse_edge_list(graph_file.read_text())
        except (OSError, ValueError) as e:
            console.print(f"[red]Could not load graph: {e}[/red]")
            return False

        with yaspin(text="Compiling...", color="cyan") as spinner:
            try:
                circuit = build_qaoa(graph, self.config.qaoa_params())
                topology = self.topology(topology_name, graph.n)
                router = self.router_factory.create(
                    router_name, seed=seed, params=self.config.router_params(seed)
                )
                spinner.text = f"Routing on {topology!r}..."
                result = router.route(circuit, topology)
                check_routing(circuit, result, topology.coupling_map)
                compiled = peephole(result.circuit) if optimize else result.circuit
                lowered = lower(compiled)
                timed = schedule(lowered, topology.coupling_map, self.config.durations())
                check_schedule(timed, lowered)
                spinner.ok("✓")
            except (ValueError, RuntimeError) as e:
                spinner.fail("✗")
                console.print(f"[red]Compilation failed: {e}[/red]")
                return False

        table = Table(show_header=False, box=None)
        table.add_row("Graph:", f"{graph.n} vertices, {graph.m} edges")
        table.add_row("Topology:", repr(topology))
        table.add_row("Router:", router_name)
        table.add_row("Swaps inserted:", str(result.swap_count))
        table.add_row("2q gates (before lowering):", str(count_2q(compiled)))
        table.add_row("2q gates:", str(timed.two_q_count))
        table.add_row("2q depth:", str(timed.two_q_depth))
        table.add_row("ZZ depth (routed):", str(depth_2q(result.circuit)))
        table.add_row("Scheduled time:", str(timed.makespan))
        console.print(table)

        try:
            if out:
                out.write_text(serialize(lowered))
                console.print(f"[green]✓ Saved circuit to: {out}[/green]")
            if schedule_out:
                schedule_out.write_text(timed.dump())
                console.print(f"[green]✓ Saved schedule to: {schedule_out}[/green]")
        except OSError as e:
            console.print(f"[red]Failed to save: {e}[/red]")
            return False
        return True

    def run_bench(
        self, config_file: Path, out: Path, workers: int | None = None, timing: bool = False
    ) -> bool:
        """Run a bench configuration with a progress bar and write the CSV."""
        run_config = RunConfig.from_file(config_file, self.config)
        if timing:
            run_config = replace(run_config, timing=True)
        workers = workers or self.config.max_workers() or os.cpu_count() or 1
        total = run_config.instances * len(run_config.sizes)

        records: list[BenchRecord] = []
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            console=console,
        ) as progress:
            task_id = progress.add_task("Running instances...", total=total)
            for record in run(
                run_config,
                workers=workers,
                on_instance=lambda _: progress.update(task_id, advance=1),
            ):
                records.append(record)

        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            with open(out, "w", newline="") as f:
                write_csv(records, f)
        except OSError as e:
            console.print(f"[red]Failed to write {out}: {e}[/red]")
            return False

        self._display_summary(records)
        console.print(f"[green]✓ Saved {total} rows to: {out}[/green]")
        return True

    def _display_summary(self, records: list[BenchRecord]):
        table = Table("Size", "2q count", "2q depth", "Scaled time", "Router ms")
        for record in records:
            cells = []
            for metric in ("two_q_count", "two_q_depth", "scaled_time", "router_ms"):
                summary = record.summary.get(metric)
                cells.append(f"{summary.mean:.2f} ± {summary.std:.2f}" if summary else "-")
            table.add_row(str(record.size), *cells)
        console.print(table)
