from topologies.coupling_map import CouplingMap
from topologies.topology import Topology


def interbus_pairs(buses: int, bus_size: int) -> list[tuple[int, int]]:
    """Position-matched links from the last half-column of bus k to the first of bus k+1."""
    half = bus_size // 2
    return [
        (k * bus_size + half + i, (k + 1) * bus_size + i)
        for k in range(buses - 1)
        for i in range(half)
    ]


def build_busnnn(buses: int, bus_size: int) -> CouplingMap:
    """Bus k owns qubits [k*bus_size, (k+1)*bus_size)."""
    if buses < 1:
        raise ValueError(f"busNNN needs at least one bus, got {buses}")
    if bus_size < 2 or bus_size % 2:
        raise ValueError(f"Bus size must be even and >= 2, got {bus_size}")

    groups = [range(k * bus_size, (k + 1) * bus_size) for k in range(buses)]
    return CouplingMap.from_pairs(
        buses * bus_size,
        interbus_pairs(buses, bus_size),
        buses=groups,
        name=f"busnnn-{buses}x{bus_size}",
    )


class BusnnnTopology(Topology):
    """Chain of qubit buses linked by point-to-point couplers."""

    parameters = {"buses": None, "bus_size": 8}
    supports_shuffle = True

    def _validate_params(self) -> None:
        super()._validate_params()
        if self._params["bus_size"] % 2:
            raise ValueError(f"Bus size must be even, got {self._params['bus_size']}")

    def _build(self) -> CouplingMap:
        return build_busnnn(self._params["buses"], self._params["bus_size"])

    @classmethod
    def for_width(cls, width: int, bus_size: int = 8) -> "BusnnnTopology":
        return cls(buses=max(1, -(-width // bus_size)), bus_size=bus_size)
