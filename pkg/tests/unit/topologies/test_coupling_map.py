import math

import numpy as np
import pytest

from topologies.busnnn_topology import build_busnnn
from topologies.coupling_map import (
    CouplingMap,
    CouplingMapParseError,
    avg_connectivity,
    distances,
    parse_coupling_map,
)
from topologies.line_topology import build_line


class TestCouplingMap:
    def test_from_pairs_normalises(self):
        cmap = CouplingMap.from_pairs(3, [(1, 0), (2, 1)])
        assert cmap.edges == frozenset({(0, 1), (1, 2)})
        assert cmap.coupled(1, 0)
        assert not cmap.coupled(0, 2)
        assert not cmap.coupled(1, 1)

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError, match="out of range"):
            CouplingMap.from_pairs(2, [(0, 2)])

    def test_rejects_overlapping_buses(self):
        with pytest.raises(ValueError, match="overlaps"):
            CouplingMap.from_pairs(4, [], buses=[[0, 1, 2], [2, 3]])

    def test_rejects_edge_inside_bus(self):
        with pytest.raises(ValueError, match="duplicates a bus"):
            CouplingMap.from_pairs(3, [(0, 1)], buses=[[0, 1, 2]])

    def test_rejects_single_qubit_bus(self):
        with pytest.raises(ValueError, match="at least two"):
            CouplingMap.from_pairs(3, [], buses=[[0]])

    def test_bus_expands_to_clique(self):
        cmap = CouplingMap.from_pairs(4, [(2, 3)], buses=[[0, 1, 2]])
        assert cmap.coupled_pairs == frozenset({(0, 1), (0, 2), (1, 2), (2, 3)})
        assert cmap.neighbors(2) == [0, 1, 3]
        assert cmap.max_degree() == 3

    def test_bus_of_pair(self):
        cmap = CouplingMap.from_pairs(4, [(2, 3)], buses=[[0, 1, 2]])
        assert cmap.bus_of_pair(1, 0) == 0
        assert cmap.bus_of_pair(2, 3) is None
        assert cmap.bus_of_pair(0, 3) is None

    def test_name_is_not_compared(self):
        assert CouplingMap.from_pairs(2, [(0, 1)], name="a") == CouplingMap.from_pairs(
            2, [(0, 1)], name="b"
        )


class TestConnectivity:
    def test_line(self):
        assert avg_connectivity(build_line(10)) == pytest.approx(1.8)

    def test_busnnn_two_buses(self):
        cmap = build_busnnn(2, 8)
        assert len(cmap.coupled_pairs) == 60
        assert avg_connectivity(cmap) == pytest.approx(7.5)


class TestDistances:
    def test_line(self):
        assert distances(build_line(4))[0][3] == 3

    def test_single_bus_is_a_clique(self):
        matrix = distances(build_busnnn(1, 8))
        assert np.array_equal(matrix, np.ones((8, 8)) - np.eye(8))

    def test_three_buses(self):
        matrix = distances(build_busnnn(3, 8))
        assert matrix[0][16] == 4
        assert matrix[4][8] == 1

    def test_disconnected_is_infinite(self):
        cmap = CouplingMap.from_pairs(3, [(0, 1)])
        assert not cmap.is_connected()
        assert math.isinf(distances(cmap)[0][2])

    def test_read_only(self):
        with pytest.raises(ValueError):
            distances(build_line(3))[0][1] = 5


class TestText:
    def test_format(self):
        cmap = CouplingMap.from_pairs(4, [(2, 3)], buses=[[0, 1, 2]])
        assert cmap.to_text() == "n 4\nedge 2 3\nbus 0 1 2\n"

    def test_round_trip(self):
        cmap = build_busnnn(3, 4)
        assert parse_coupling_map(cmap.to_text()) == cmap

    @pytest.mark.parametrize(
        "text, line, message",
        [
            ("edge 0 1\n", 1, "missing 'n"),
            ("n 3\nedge 0\n", 2, "expected 'edge i j'"),
            ("n 3\nlink 0 1\n", 2, "unknown keyword"),
            ("n 3\nedge 0 x\n", 2, "invalid integer"),
            ("n 3\nn 4\n", 2, "single 'n"),
            ("n 0\n", 1, "must be positive"),
            ("n 2\nedge 0 5\n", 2, "out of range"),
            ("n 4\nedge 0 5\nedge 1 2\nedge 2 3\n", 2, "out of range"),
            ("n 4\nedge 1 1\nedge 2 3\n", 2, "self-coupling"),
            ("n 4\nbus 0\nedge 2 3\n", 2, "at least two"),
            ("n 6\nbus 0 1 2\nbus 2 3\nedge 4 5\n", 3, "overlaps"),
            ("n 4\nedge 0 1\nbus 0 1 2\nedge 2 3\n", 2, "duplicates a bus"),
        ],
    )
    def test_parse_errors(self, text, line, message):
        with pytest.raises(CouplingMapParseError, match=message) as excinfo:
            parse_coupling_map(text)
        assert excinfo.value.line_number == line
