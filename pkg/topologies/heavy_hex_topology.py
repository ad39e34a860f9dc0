"""Heavy-hex lattice: rows of qubits joined by bridge qubits every four columns.

Hexagon row k holds bridges at columns offset_k + 4j (j = 0..cols), with
offset 0 on even rows and 2 on odd rows. A qubit row spans the columns of the
bridges touching it, and rows that stop short of the lattice edge get one
dangling qubit. Qubits are numbered row by row with each bridge row in between.
(6, 3) is the 127-qubit Eagle layout.
"""

from itertools import count

from topologies.coupling_map import CouplingMap
from topologies.topology import Topology

BRIDGE_SPACING = 4


def _bridge_columns(hex_row: int, cols: int) -> list[int]:
    offset = 0 if hex_row % 2 == 0 else BRIDGE_SPACING // 2
    return [offset + BRIDGE_SPACING * j for j in range(cols + 1)]


def build_heavy_hex(rows: int, cols: int) -> CouplingMap:
    if rows < 1 or cols < 1:
        raise ValueError(f"Heavy-hex needs rows, cols >= 1, got ({rows}, {cols})")

    bridges = [_bridge_columns(k, cols) for k in range(rows)]

    spans = []
    for r in range(rows + 1):
        touching = [c for k in (r - 1, r) if 0 <= k < rows for c in bridges[k]]
        spans.append([min(touching), max(touching)])

    lo = min(start for start, _ in spans)
    hi = max(end for _, end in spans)
    for span in spans:
        if span[0] > lo:
            span[0] -= 1
        if span[1] < hi:
            span[1] += 1

    numbering = count()
    row_qubits: list[dict[int, int]] = []
    bridge_qubits: list[dict[int, int]] = []
    for r in range(rows + 1):
        start, end = spans[r]
        row_qubits.append({c: next(numbering) for c in range(start, end + 1)})
        if r < rows:
            bridge_qubits.append({c: next(numbering) for c in bridges[r]})

    pairs = []
    for qubits in row_qubits:
        columns = sorted(qubits)
        pairs.extend((qubits[a], qubits[b]) for a, b in zip(columns, columns[1:]))
    for k, qubits in enumerate(bridge_qubits):
        for c, bridge in qubits.items():
            pairs.append((row_qubits[k][c], bridge))
            pairs.append((bridge, row_qubits[k + 1][c]))

    n = next(numbering)
    return CouplingMap.from_pairs(n, pairs, name=f"heavy-hex-{rows}x{cols}")


class HeavyHexTopology(Topology):
    """IBM-style heavy-hex lattice; defaults to the 127-qubit Eagle."""

    parameters = {"rows": 6, "cols": 3}
    aliases = ("eagle",)

    def _build(self) -> CouplingMap:
        return build_heavy_hex(self._params["rows"], self._params["cols"])

    @classmethod
    def for_width(cls, width: int) -> "HeavyHexTopology":
        rows, cols = 1, 1
        while True:
            topology = cls(rows=rows, cols=cols)
            if topology.qubit_count >= width:
                return topology
            if rows <= cols:
                rows += 1
            else:
                cols += 1
