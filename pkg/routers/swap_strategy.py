import logging
import math
from dataclasses import dataclass

import numpy as np

from routers.router import RoutingError
from topologies.busnnn_topology import BusnnnTopology, build_busnnn, interbus_pairs
from topologies.complete_topology import CompleteTopology, build_complete
from topologies.coupling_map import CouplingMap, Pair
from topologies.grid_topology import GridTopology, build_grid
from topologies.line_topology import LineTopology, build_line
from topologies.topology import Topology

logger = logging.getLogger(__name__)

HORIZON_FACTOR = 4


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class SwapLayer:
    """Disjoint physical pairs swapped simultaneously."""

    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        used: set[int] = set()
        for a, b in self.pairs:
            if a == b or a in used or b in used:
                raise ValueError(f"Swap layer pairs must be disjoint, got {self.pairs}")
            used.update((a, b))

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.pairs)


@dataclass(frozen=True)
class SwapStrategy:
    """Swap layers applied cyclically on a coupling map.

    layer_bound is the layer count by which full connectivity is guaranteed;
    round_length groups layers into the rounds the bound may be stated in.
    """

    coupling_map: CouplingMap
    layers: tuple[SwapLayer, ...]
    name: str
    layer_bound: int
    round_length: int = 2

    def __post_init__(self):
        if self.layer_bound < 0 or self.round_length < 1:
            raise ValueError("Layer bound must be >= 0 and round length >= 1")
        for index, layer in enumerate(self.layers):
            for a, b in layer.pairs:
                if not self.coupling_map.coupled(a, b):
                    raise ValueError(f"Layer {index} swaps uncoupled pair ({a}, {b})")

    def layer(self, k: int) -> SwapLayer:
        """The k-th applied layer (0-based), cycling through the sequence."""
        return self.layers[k % len(self.layers)]

    @property
    def horizon(self) -> int:
        return HORIZON_FACTOR * max(1, self.layer_bound)

    def dump(self, count: int | None = None) -> str:
        count = len(self.layers) if count is None else count
        lines = [f"layer {k + 1}: {self.layer(k)}" for k in range(count) if self.layers]
        return "\n".join(lines) + ("\n" if lines else "")


def strategy_line(n: int) -> SwapStrategy:
    """Alternate swaps on even-indexed edges (i, i+1) and odd-indexed ones."""
    cmap = build_line(n)
    even = SwapLayer(tuple((i, i + 1) for i in range(0, n - 1, 2)))
    odd = SwapLayer(tuple((i, i + 1) for i in range(1, n - 1, 2)))
    layers = (even, odd) if n > 1 else ()
    return SwapStrategy(cmap, layers, name=f"line-{n}", layer_bound=max(0, n - 2))


def _grid_row_layer(size: int, parity: int) -> SwapLayer:
    # even rows start on even edges, odd rows on odd edges
    return SwapLayer(
        tuple(
            (r * size + c, r * size + c + 1)
            for r in range(size)
            for c in range(size - 1)
            if (c + r + parity) % 2 == 0
        )
    )


def _grid_column_layer(size: int, parity: int) -> SwapLayer:
    return SwapLayer(
        tuple(
            (r * size + c, (r + 1) * size + c)
            for r in range(parity, size - 1, 2)
            for c in range(size)
        )
    )


def grid_round_bound(size: int) -> int:
    """Rounds within which the grid strategy reaches full connectivity."""
    return max(1, _ceil_div((size - 2) * (size + 1), 2))


def strategy_grid(size: int) -> SwapStrategy:
    """Rounds of size-1 alternating row layers, then two row-swapping column layers."""
    cmap = build_grid(size)
    if size < 2:
        return SwapStrategy(cmap, (), name=f"grid-{size}", layer_bound=0, round_length=1)

    rows = [_grid_row_layer(size, k % 2) for k in range(size - 1)]
    columns = [_grid_column_layer(size, 0), _grid_column_layer(size, 1)]
    round_length = size + 1
    return SwapStrategy(
        cmap,
        tuple(rows + columns),
        name=f"grid-{size}x{size}",
        layer_bound=grid_round_bound(size) * round_length,
        round_length=round_length,
    )


def strategy_busnnn(buses: int, bus_size: int) -> SwapStrategy:
    """Alternate inter-bus swaps with half-column swaps inside every bus but the last."""
    cmap = build_busnnn(buses, bus_size)
    if buses < 2:
        return SwapStrategy(cmap, (), name=f"busnnn-{buses}x{bus_size}", layer_bound=0)

    half = bus_size // 2
    interbus = SwapLayer(tuple(interbus_pairs(buses, bus_size)))
    intrabus = SwapLayer(
        tuple(
            (q - half, q)
            for bus in range(1, buses)
            for q in range(half * (2 * bus - 1), bus_size * bus)
        )
    )
    return SwapStrategy(
        cmap,
        (interbus, intrabus),
        name=f"busnnn-{buses}x{bus_size}",
        layer_bound=(4 * buses - 5) * _ceil_div(buses, buses + 1),
    )


def strategy_complete(n: int) -> SwapStrategy:
    return SwapStrategy(build_complete(n), (), name=f"complete-{n}", layer_bound=0)


def strategy_for_topology(topology: Topology) -> SwapStrategy:
    """Full-shuffle strategy for a topology instance."""
    params = topology.params
    if isinstance(topology, LineTopology):
        return strategy_line(params["n"])
    if isinstance(topology, GridTopology):
        return strategy_grid(params["size"])
    if isinstance(topology, BusnnnTopology):
        return strategy_busnnn(params["buses"], params["bus_size"])
    if isinstance(topology, CompleteTopology):
        return strategy_complete(params["n"])
    raise ValueError(f"No full-shuffle strategy is defined for {topology!r}")


def _coverage_run(strategy: SwapStrategy):
    """Yield (layers applied, swaps applied, all pairs covered) after each configuration."""
    cmap = strategy.coupling_map
    n = cmap.n
    pairs = np.array(sorted(cmap.coupled_pairs), dtype=np.int64).reshape(-1, 2)
    covered = np.eye(n, dtype=bool)
    logical_at = np.arange(n)

    def mark() -> bool:
        a, b = logical_at[pairs[:, 0]], logical_at[pairs[:, 1]]
        covered[a, b] = True
        covered[b, a] = True
        return bool(covered.all())

    swaps = 0
    yield 0, 0, mark()
    if not strategy.layers:
        return

    for k in range(strategy.horizon):
        layer = strategy.layer(k)
        if layer.pairs:
            ps = np.array([p for p, _ in layer.pairs])
            qs = np.array([q for _, q in layer.pairs])
            logical_at[ps], logical_at[qs] = logical_at[qs], logical_at[ps].copy()
        swaps += len(layer)
        yield k + 1, swaps, mark()


def _first_full(strategy: SwapStrategy) -> tuple[int, int]:
    for layers, swaps, full in _coverage_run(strategy):
        if full:
            logger.debug("%s fully connected after %d layers", strategy.name, layers)
            return layers, swaps
    raise RoutingError(
        f"{strategy.name} did not reach full connectivity within {strategy.horizon} layers"
    )


def full_connectivity_layers(strategy: SwapStrategy) -> int:
    """Layers applied from the identity mapping until every logical pair has been coupled."""
    return _first_full(strategy)[0]


def full_connectivity_rounds(strategy: SwapStrategy) -> int:
    return _ceil_div(full_connectivity_layers(strategy), strategy.round_length)


def swaps_to_full_connectivity(strategy: SwapStrategy) -> int:
    return _first_full(strategy)[1]


def l_swap(n: int) -> int:
    """Swaps the line strategy needs: (n-1)(n-2)/2."""
    return (n - 1) * (n - 2) // 2 if n >= 2 else 0


def g_swap(n: int) -> int:
    """Upper bound on grid swaps for n qubits, side s = ceil(sqrt(n))."""
    if n < 1:
        return 0
    s = math.isqrt(n - 1) + 1
    tail = _ceil_div(2 * s - 3, 4)
    if s % 2:
        return s * (s + 1) * _ceil_div(s, 2) * tail
    return (s // 2 * (s + 1) ** 2 + 2 * s * tail) * _ceil_div(s, 2)


def b_swap(n: int, bus_size: int) -> int:
    """Swaps the busNNN strategy needs for n qubits on buses of bus_size."""
    h = bus_size // 2 * _ceil_div(n - bus_size, bus_size)
    return h * (h - 1)
