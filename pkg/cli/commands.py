import json
import sys
from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from bench.run_config import ConfigError
from cli.app import SwapbenderApp
from cli.factories import GraphFamilyFactory, TopologyFactory
from config import Config

console = Console()


def parse_params(pairs: tuple[str, ...]) -> dict[str, Any]:
    """Turn `key=value` options into a dict, decoding JSON scalars where possible."""
    params: dict[str, Any] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"expected key=value, got {pair!r}")
        try:
            params[key.strip()] = json.loads(raw)
        except json.JSONDecodeError:
            params[key.strip()] = raw
    return params


def _fail(message: str) -> None:
    console.print(f"[red]{message}[/red]")
    sys.exit(1)


@click.command(name="config")
@click.option("--show", is_flag=True, help="Show current configuration")
@click.option("--set", "set_pair", nargs=2, metavar="KEY VALUE", help="Set a preference")
@click.option("--reset", is_flag=True, help="Reset preferences to defaults")
@click.option("--example-env", is_flag=True, help="Write a .env.example file")
def config_cmd(show, set_pair, reset, example_env):
    """Configure Swapbender defaults."""
    config = Config()

    if set_pair:
        key, raw = set_pair
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        try:
            config.set_preference(key, value)
        except (ValueError, RuntimeError) as e:
            _fail(f"Error: {e}")
        console.print(f"[green]✓[/green] Set {key} = {value!r}")
    elif reset:
        config.reset_preferences()
        console.print("[green]✓[/green] Preferences reset to defaults")
    elif example_env:
        config.create_example_env()
    elif show:
        _show_configuration(config)
    else:
        console.print("Use --show, --set KEY VALUE, --reset or --example-env")


def _show_configuration(config: Config):
    """Display current configuration."""
    console.print("[bold]Current Configuration:[/bold]\n")
    table = Table(show_header=False)
    for key, value in config.get_preferences().items():
        table.add_row(key.replace("_", " ").title() + ":", str(value))
    console.print(table)

    workers = config.max_workers()
    console.print(f"\nMax workers: {workers if workers else 'CPU count'}")
    console.print(f"Preferences file: {config.config_file}")


@click.group(name="bench")
def bench_cmd():
    """Run benchmark configurations."""


@bench_cmd.command(name="run")
@click.option("--config", "config_file", type=click.Path(exists=True), required=True)
@click.option("--out", type=click.Path(), required=True, help="CSV output path")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes")
@click.option("--timing", is_flag=True, help="Record router wall time")
def bench_run_cmd(config_file, out, workers, timing):
    """Run every instance of a bench configuration and write a CSV."""
    app = SwapbenderApp()
    try:
        ok = app.run_bench(Path(config_file), Path(out), workers=workers, timing=timing)
    except ConfigError as e:
        _fail(f"Invalid configuration: {e}")
    except (ValueError, RuntimeError) as e:
        _fail(f"Benchmark failed: {e}")
    if not ok:
        sys.exit(1)


@click.group(name="topo")
def topo_cmd():
    """Inspect coupling maps."""


@topo_cmd.command(name="list")
def topo_list_cmd():
    """List topology families."""
    factory = TopologyFactory()
    table = Table("Name", "Parameters", "Shuffle", "Description")
    for name in factory.available_types:
        topology_class = factory.get_class(name)
        params = ", ".join(
            f"{key}={'?' if default is None else default}"
            for key, default in topology_class.parameters.items()
        )
        table.add_row(
            name,
            params or "-",
            "yes" if topology_class.supports_shuffle else "no",
            factory.get_description(name),
        )
    console.print(table)


@topo_cmd.command(name="dump")
@click.argument("name")
@click.option("--width", type=click.IntRange(min=1), help="Smallest instance with this many qubits")
@click.option("-p", "--param", multiple=True, help="Topology parameter key=value")
def topo_dump_cmd(name, width, param):
    """Print a coupling map in text form."""
    app = SwapbenderApp()
    try:
        topology = app.topology(name, width, **parse_params(param))
        click.echo(app.topology_text(topology), nl=False)
    except ValueError as e:
        _fail(f"Error: {e}")


@click.group(name="strategy")
def strategy_cmd():
    """Inspect full-shuffle swap strategies."""


@strategy_cmd.command(name="dump")
@click.argument("name")
@click.option("--width", type=click.IntRange(min=1), help="Smallest instance with this many qubits")
@click.option("-p", "--param", multiple=True, help="Topology parameter key=value")
def strategy_dump_cmd(name, width, param):
    """Print the numbered swap layers of a topology's strategy."""
    app = SwapbenderApp()
    try:
        topology = app.topology(name, width, **parse_params(param))
        click.echo(app.strategy_text(topology), nl=False)
    except (ValueError, RuntimeError) as e:
        _fail(f"Error: {e}")


@click.group(name="graph")
def graph_cmd():
    """Generate problem graphs."""


@graph_cmd.command(name="gen")
@click.argument("family")
@click.option("--size", type=click.IntRange(min=1), required=True)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("-p", "--param", multiple=True, help="Family parameter key=value")
def graph_gen_cmd(family, size, seed, param):
    """Print a seeded graph instance as an edge list."""
    app = SwapbenderApp()
    try:
        click.echo(app.graph_text(family, size, seed, **parse_params(param)), nl=False)
    except (ValueError, RuntimeError) as e:
        _fail(f"Error: {e}")


@graph_cmd.command(name="list")
def graph_list_cmd():
    """List graph families."""
    factory = GraphFamilyFactory()
    table = Table("Name", "Aliases", "Description")
    for name in factory.available_types:
        family_class = factory.get_class(name)
        aliases = list(family_class.aliases) + list(family_class.presets)
        table.add_row(name, ", ".join(aliases) or "-", factory.get_description(name))
    console.print(table)


@click.command(name="compile")
@click.option("--graph", "graph_file", type=click.Path(exists=True), required=True)
@click.option("--topo", required=True, help="Topology family")
@click.option("--router", required=True, help="Router name")
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--no-optimize", is_flag=True, help="Skip the peephole pass")
@click.option("--out", type=click.Path(), help="Write the lowered circuit here")
@click.option("--schedule-out", type=click.Path(), help="Write the schedule here")
def compile_cmd(graph_file, topo, router, seed, no_optimize, out, schedule_out):
    """Compile one edge-list graph onto a topology."""
    app = SwapbenderApp()
    ok = app.compile_instance(
        Path(graph_file),
        topo,
        router,
        seed=seed,
        optimize=not no_optimize,
        out=Path(out) if out else None,
        schedule_out=Path(schedule_out) if schedule_out else None,
    )
    if not ok:
        sys.exit(1)
