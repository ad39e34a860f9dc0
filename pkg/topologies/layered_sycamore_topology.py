from topologies.coupling_map import CouplingMap
from topologies.sycamore_topology import build_sycamore
from topologies.topology import Topology

LAYER_QUBITS = 72


def build_layered_sycamore() -> CouplingMap:
    """Two 72-qubit Sycamore layers stacked with a vertical link per qubit."""
    layer = build_sycamore(LAYER_QUBITS)
    pairs = list(layer.edges)
    pairs.extend((a + LAYER_QUBITS, b + LAYER_QUBITS) for a, b in layer.edges)
    pairs.extend((q, q + LAYER_QUBITS) for q in range(LAYER_QUBITS))
    return CouplingMap.from_pairs(2 * LAYER_QUBITS, pairs, name="layered-sycamore")


class LayeredSycamoreTopology(Topology):
    """Two Sycamore chips joined by transverse links (non-planar)."""

    def _build(self) -> CouplingMap:
        return build_layered_sycamore()

    @classmethod
    def for_width(cls, width: int) -> "LayeredSycamoreTopology":
        if width > 2 * LAYER_QUBITS:
            raise ValueError(f"Layered Sycamore holds {2 * LAYER_QUBITS} qubits, need {width}")
        return cls()
