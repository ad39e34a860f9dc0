from topologies.coupling_map import CouplingMap
from topologies.topology import Topology

RING = 8
MAX_OCTAGON_COLS = 5

# ring positions: 0-1 top, 2-3 right, 4-5 bottom, 6-7 left
HORIZONTAL_COUPLERS = ((2, 7), (3, 6))
VERTICAL_COUPLERS = ((5, 0), (4, 1))


def build_aspen(octagon_rows: int, octagon_cols: int) -> CouplingMap:
    """Grid of 8-qubit rings; two couplers between horizontal neighbours and,
    in the outer octagon columns, two between vertical neighbours."""
    if octagon_rows < 1 or octagon_cols < 1:
        raise ValueError(
            f"Aspen needs at least one octagon, got {octagon_rows}x{octagon_cols}"
        )

    def qubit(r: int, c: int, position: int) -> int:
        return RING * (r * octagon_cols + c) + position

    pairs = []
    for r in range(octagon_rows):
        for c in range(octagon_cols):
            pairs.extend((qubit(r, c, p), qubit(r, c, (p + 1) % RING)) for p in range(RING))
            if c + 1 < octagon_cols:
                pairs.extend(
                    (qubit(r, c, a), qubit(r, c + 1, b)) for a, b in HORIZONTAL_COUPLERS
                )
            if r + 1 < octagon_rows and c in (0, octagon_cols - 1):
                pairs.extend(
                    (qubit(r, c, a), qubit(r + 1, c, b)) for a, b in VERTICAL_COUPLERS
                )

    n = RING * octagon_rows * octagon_cols
    return CouplingMap.from_pairs(n, pairs, name=f"aspen-{octagon_rows}x{octagon_cols}")


class AspenTopology(Topology):
    """Rigetti Aspen-style octagon lattice; defaults to 80 qubits."""

    parameters = {"octagon_rows": 2, "octagon_cols": 5}

    def _build(self) -> CouplingMap:
        return build_aspen(self._params["octagon_rows"], self._params["octagon_cols"])

    @classmethod
    def for_width(cls, width: int) -> "AspenTopology":
        octagons = max(1, -(-width // RING))
        cols = min(octagons, MAX_OCTAGON_COLS)
        rows = -(-octagons // cols)
        return cls(octagon_rows=rows, octagon_cols=cols)
