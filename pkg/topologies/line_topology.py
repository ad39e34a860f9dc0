from topologies.coupling_map import CouplingMap
from topologies.topology import Topology


def build_line(n: int) -> CouplingMap:
    """Qubits 0..n-1 with edges (i, i+1)."""
    return CouplingMap.from_pairs(n, ((i, i + 1) for i in range(n - 1)), name=f"line-{n}")


class LineTopology(Topology):
    """One-dimensional chain of qubits."""

    parameters = {"n": None}
    supports_shuffle = True

    def _build(self) -> CouplingMap:
        return build_line(self._params["n"])

    @classmethod
    def for_width(cls, width: int) -> "LineTopology":
        return cls(n=max(2, width))
