import math

from topologies.coupling_map import CouplingMap
from topologies.topology import Topology


def build_grid(size: int) -> CouplingMap:
    """size x size lattice, qubit r*size + c, horizontal and vertical neighbours."""
    pairs = []
    for r in range(size):
        for c in range(size):
            q = r * size + c
            if c + 1 < size:
                pairs.append((q, q + 1))
            if r + 1 < size:
                pairs.append((q, q + size))
    return CouplingMap.from_pairs(size * size, pairs, name=f"grid-{size}x{size}")


class GridTopology(Topology):
    """Square two-dimensional grid."""

    parameters = {"size": None}
    supports_shuffle = True

    def _build(self) -> CouplingMap:
        return build_grid(self._params["size"])

    @classmethod
    def for_width(cls, width: int) -> "GridTopology":
        side = math.isqrt(max(width, 4) - 1) + 1
        return cls(size=side)
