import importlib
import inspect
import logging
from pathlib import Path
from typing import Any

from rich.console import Console

from problem_graphs.graph_generator import GraphGenerator
from routers.router import Router
from routers.sabre_router import RouterParams
from topologies.topology import Topology

console = Console()
logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def kebab_name(class_name: str, suffix: str) -> str:
    """`HeavyHexTopology` with suffix `Topology` -> `heavy-hex`."""
    stem = class_name.removesuffix(suffix)
    name = ""
    for i, char in enumerate(stem):
        if i > 0 and char.isupper():
            name += "-"
        name += char.lower()
    return name


class ServiceDiscovery:
    """Discovers pluggable families from the filesystem."""

    @staticmethod
    def discover(package: str, file_suffix: str, base: type) -> dict[str, type]:
        """Import `<package>/*<file_suffix>.py` and collect subclasses of `base` by kebab name."""
        found: dict[str, type] = {}
        package_dir = PROJECT_ROOT / package

        try:
            if not package_dir.exists():
                return found
        except (OSError, PermissionError) as e:
            console.print(f"[yellow]Warning: Cannot access {package} directory: {e}[/yellow]")
            return found

        for file_path in sorted(package_dir.glob(f"*{file_suffix}.py")):
            module_name = file_path.stem
            try:
                module = importlib.import_module(f"{package}.{module_name}")
            except ImportError as e:
                console.print(f"[yellow]Warning: Could not import {module_name}: {e}[/yellow]")
                continue

            for name, obj in inspect.getmembers(module, inspect.isclass):
                if (
                    issubclass(obj, base)
                    and obj is not base
                    and not inspect.isabstract(obj)
                    and obj.__module__ == module.__name__
                ):
                    found[kebab_name(name, base.__name__)] = obj

        logger.debug("Discovered %s: %s", package, ", ".join(sorted(found)))
        return found

    @staticmethod
    def discover_graph_generators() -> dict[str, type[GraphGenerator]]:
        return ServiceDiscovery.discover("problem_graphs", "_graph_generator", GraphGenerator)

    @staticmethod
    def discover_topologies() -> dict[str, type[Topology]]:
        return ServiceDiscovery.discover("topologies", "_topology", Topology)

    @staticmethod
    def discover_routers() -> dict[str, type[Router]]:
        return ServiceDiscovery.discover("routers", "_router", Router)


class PluginFactory:
    """Name resolution shared by the family factories."""

    kind = "plugin"

    def __init__(self, plugins: dict[str, type]):
        self._plugins = plugins

    @property
    def available_types(self) -> list[str]:
        return sorted(self._plugins.keys())

    def resolve(self, name: str) -> tuple[str, dict[str, Any]] | None:
        """Canonical name and preset parameters for a name, alias or preset."""
        key = name.lower()
        if key in self._plugins:
            return key, {}
        for canonical, plugin in self._plugins.items():
            if key in getattr(plugin, "aliases", ()):
                return canonical, {}
            presets = getattr(plugin, "presets", {})
            if key in presets:
                return canonical, dict(presets[key])
        return None

    def get_class(self, name: str) -> type:
        resolved = self.resolve(name)
        if resolved is None:
            raise ValueError(
                f"Unknown {self.kind} '{name}'. Available: {', '.join(self.available_types)}"
            )
        return self._plugins[resolved[0]]

    def get_description(self, name: str) -> str:
        """Description from the first docstring line."""
        resolved = self.resolve(name)
        plugin = self._plugins.get(resolved[0]) if resolved else None
        if plugin and plugin.__doc__:
            return plugin.__doc__.strip().split("\n")[0]
        return f"{name.title()} {self.kind}"


class GraphFamilyFactory(PluginFactory):
    """Factory for problem-graph generators."""

    kind = "graph family"

    def __init__(self):
        super().__init__(ServiceDiscovery.discover_graph_generators())

    def create(self, name: str, **params: Any) -> GraphGenerator:
        resolved = self.resolve(name)
        generator_class = self.get_class(name)
        merged = {**resolved[1], **params}
        return generator_class(**merged)


class TopologyFactory(PluginFactory):
    """Factory for topology families."""

    kind = "topology"

    def __init__(self):
        super().__init__(ServiceDiscovery.discover_topologies())

    def create(self, name: str, **params: Any) -> Topology:
        return self.get_class(name)(**params)

    def for_width(self, name: str, width: int) -> Topology:
        """Smallest instance of the family holding `width` qubits."""
        return self.get_class(name).for_width(width)

    def supports_shuffle(self, name: str) -> bool:
        return self.get_class(name).supports_shuffle


class RouterFactory(PluginFactory):
    """Factory for routers."""

    kind = "router"

    def __init__(self):
        super().__init__(ServiceDiscovery.discover_routers())

    def create(self, name: str, seed: int = 0, params: RouterParams | None = None) -> Router:
        router_class = self.get_class(name)
        if "params" in inspect.signature(router_class).parameters:
            return router_class(seed=seed, params=params)
        return router_class(seed=seed)
