import logging
import sys

import click
from rich.console import Console
from rich.logging import RichHandler

from cli.app import SwapbenderApp
from cli.commands import (
    bench_cmd,
    compile_cmd,
    config_cmd,
    graph_cmd,
    strategy_cmd,
    topo_cmd,
)
from config import Config

console = Console()


@click.group(invoke_without_command=True)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=lambda: Config().log_level(),
    help="Logging verbosity",
)
@click.pass_context
def cli(ctx, log_level):
    """Swapbender - routing and scheduling benchmarks for QAOA circuits"""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
    )
    if ctx.invoked_subcommand is None:
        SwapbenderApp.display_banner()
        click.echo(ctx.get_help())


cli.add_command(config_cmd)
cli.add_command(bench_cmd)
cli.add_command(topo_cmd)
cli.add_command(strategy_cmd)
cli.add_command(graph_cmd)
cli.add_command(compile_cmd)


def main():
    """Main entry point."""
    try:
        cli()
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted by user[/yellow]")
        sys.exit(0)
    except Exception as e:
        console.print(f"\n[red]Error: {e}[/red]")
        sys.exit(1)


if __name__ == "__main__":
    main()
