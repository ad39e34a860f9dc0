import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from circuits.qaoa import QaoaParams
from cli.factories import GraphFamilyFactory, RouterFactory, TopologyFactory
from config import Config
from routers.sabre_router import RouterParams
from scheduling.scheduler import GateDurations

BASELINE_ROUTER = "none"
MAX_SEED = 2**64


class ConfigError(ValueError):
    """Raised for a bench configuration that cannot run."""


@dataclass(frozen=True)
class RunConfig:
    """One benchmark configuration: a graph family swept over sizes on one topology."""

    family: str
    sizes: tuple[int, ...]
    topology: str = "line"
    router: str = "sabre"
    family_params: dict[str, Any] = field(default_factory=dict)
    topology_params: dict[str, Any] = field(default_factory=dict)
    instances: int = 100
    base_seed: int = 0
    durations: GateDurations = field(default_factory=GateDurations)
    optimize: bool = True
    router_params: RouterParams = field(default_factory=RouterParams)
    qaoa: QaoaParams = field(default_factory=QaoaParams)
    timing: bool = False

    @property
    def is_baseline(self) -> bool:
        return self.router == BASELINE_ROUTER

    @classmethod
    def from_dict(cls, data: dict[str, Any], config: Config | None = None) -> "RunConfig":
        """Build from parsed JSON; absent keys fall back to the user preferences."""
        if not isinstance(data, dict):
            raise ConfigError("Bench configuration must be a JSON object")
        config = config or Config()
        prefs = config.get_preferences()

        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(sorted(unknown))}")
        for key in ("family", "sizes"):
            if key not in data:
                raise ConfigError(f"Missing required key '{key}'")

        try:
            sizes = data["sizes"]
            sizes = (sizes,) if isinstance(sizes, int) else tuple(int(s) for s in sizes)
            router_params = {**asdict(config.router_params()), **data.get("router_params", {})}
            durations = {**asdict(config.durations()), **data.get("durations", {})}
            qaoa = {**asdict(config.qaoa_params()), **data.get("qaoa", {})}
            return cls(
                family=str(data["family"]),
                sizes=sizes,
                topology=str(data.get("topology", "line")),
                router=str(data.get("router", "sabre")).lower(),
                family_params=dict(data.get("family_params", {})),
                topology_params=dict(data.get("topology_params", {})),
                instances=int(data.get("instances", prefs["instances"])),
                base_seed=int(data.get("base_seed", 0)),
                durations=GateDurations(**durations),
                optimize=bool(data.get("optimize", prefs["optimize"])),
                router_params=RouterParams(**router_params),
                qaoa=QaoaParams(**qaoa),
                timing=bool(data.get("timing", False)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid bench configuration: {e}") from e

    @classmethod
    def from_file(cls, path: Path, config: Config | None = None) -> "RunConfig":
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON in {path}: {e}") from e
        except OSError as e:
            raise ConfigError(f"Could not read {path}: {e}") from e
        return cls.from_dict(data, config)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["sizes"] = list(self.sizes)
        return data

    def validate(self) -> None:
        """Raise ConfigError unless every size can be generated, placed and routed."""
        if not self.sizes or any(size < 1 for size in self.sizes):
            raise ConfigError(f"Sizes must be positive, got {list(self.sizes)}")
        if self.instances < 1:
            raise ConfigError(f"Instance count must be >= 1, got {self.instances}")
        if self.base_seed < 0 or self.base_seed + self.instances > MAX_SEED:
            raise ConfigError(
                f"Seeds {self.base_seed}..{self.base_seed + self.instances - 1} "
                "must fit in 64 bits"
            )

        try:
            generator = GraphFamilyFactory().create(self.family, **self.family_params)
            for size in self.sizes:
                generator.check_size(size)
        except ValueError as e:
            raise ConfigError(f"Graph family: {e}") from e

        if self.is_baseline:
            return

        routers = RouterFactory()
        if routers.resolve(self.router) is None:
            raise ConfigError(
                f"Unknown router '{self.router}'. "
                f"Available: {', '.join(routers.available_types + [BASELINE_ROUTER])}"
            )

        topologies = TopologyFactory()
        widest = max(generator.node_count(size) for size in self.sizes)
        try:
            if self.topology_params:
                topology = topologies.create(self.topology, **self.topology_params)
            else:
                topology = topologies.for_width(self.topology, widest)
        except ValueError as e:
            raise ConfigError(f"Topology: {e}") from e

        if topology.qubit_count < widest:
            raise ConfigError(
                f"{topology!r} has {topology.qubit_count} qubits, "
                f"instances need up to {widest}"
            )
        if routers.resolve(self.router)[0] == "shuffle" and not topology.supports_shuffle:
            raise ConfigError(
                f"The shuffle router supports line, grid and busnnn, not '{self.topology}'"
            )
