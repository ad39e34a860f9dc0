from itertools import combinations

from topologies.coupling_map import CouplingMap
from topologies.topology import Topology


def build_complete(n: int) -> CouplingMap:
    """All-to-all point-to-point couplers; the routing-free baseline."""
    return CouplingMap.from_pairs(n, combinations(range(n), 2), name=f"complete-{n}")


class CompleteTopology(Topology):
    """Fully connected device, used as the baseline."""

    parameters = {"n": None}

    def _build(self) -> CouplingMap:
        return build_complete(self._params["n"])

    @classmethod
    def for_width(cls, width: int) -> "CompleteTopology":
        return cls(n=max(1, width))
