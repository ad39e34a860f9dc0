import pytest

from circuits.circuit import depth_2q
from circuits.gate import Gate
from circuits.lowering import lower
from circuits.qaoa import build_qaoa
from problem_graphs.sherrington_kirkpatrick_graph_generator import gen_sk
from routers.router import RoutingError
from routers.shuffle_router import (
    ShuffleRouter,
    commutation_order,
    interaction_levels,
    route_shuffle,
)
from routers.swap_strategy import SwapLayer, SwapStrategy, strategy_complete, strategy_line
from routers.verification import check_routing
from topologies.aspen_topology import AspenTopology
from topologies.busnnn_topology import BusnnnTopology
from topologies.complete_topology import build_complete
from topologies.grid_topology import GridTopology
from topologies.line_topology import LineTopology, build_line
from tests.test_constants import (
    TRAIL_COMMUTED_DEPTH,
    TRAIL_N,
    TRAIL_NAIVE_DEPTH,
    TRAIL_ORDER,
    L_SWAP_6,
    ZZ_ANGLE,
)


class TestCommutationOrder:
    def test_interaction_levels(self):
        zz = [Gate.zz(ZZ_ANGLE, a, b) for a, b in TRAIL_ORDER]
        assert interaction_levels(zz) == TRAIL_NAIVE_DEPTH
        assert interaction_levels([]) == 0

    def test_reorders_trail(self):
        zz = [Gate.zz(ZZ_ANGLE, a, b) for a, b in TRAIL_ORDER]
        ordered = commutation_order(zz)
        assert sorted(map(str, ordered)) == sorted(map(str, zz))
        assert interaction_levels(ordered) == TRAIL_COMMUTED_DEPTH

    def test_keeps_order_when_already_shallow(self):
        zz = [Gate.zz(0.1, 0, 1), Gate.zz(0.1, 2, 3), Gate.zz(0.1, 1, 2)]
        assert commutation_order(zz) == zz


class TestRouteShuffle:
    def test_commuting_terms_reach_minimal_depth(self, trail_circuit):
        circuit = trail_circuit
        assert depth_2q(circuit) == TRAIL_NAIVE_DEPTH

        result = route_shuffle(circuit, build_complete(TRAIL_N), strategy_complete(TRAIL_N))
        assert result.swap_count == 0
        assert depth_2q(result.circuit) == TRAIL_COMMUTED_DEPTH
        check_routing(circuit, result, build_complete(TRAIL_N))

    def test_sk_on_line(self):
        circuit = build_qaoa(gen_sk(6))
        cmap = build_line(6)
        result = route_shuffle(circuit, cmap, strategy_line(6))
        assert 0 < result.swap_count <= L_SWAP_6
        check_routing(circuit, result, cmap)

    def test_narrow_circuit_uses_ancilla_slots(self):
        circuit = build_qaoa(gen_sk(3))
        cmap = build_line(5)
        result = route_shuffle(circuit, cmap, strategy_line(5))
        assert result.circuit.width == 5
        check_routing(circuit, result, cmap)

    def test_single_bus_needs_no_swaps(self):
        circuit = build_qaoa(gen_sk(8))
        topology = BusnnnTopology(buses=1)
        result = ShuffleRouter().route(circuit, topology)
        assert result.swap_count == 0

    def test_rejects_foreign_strategy(self):
        with pytest.raises(ValueError, match="different coupling map"):
            route_shuffle(build_qaoa(gen_sk(4)), build_line(4), strategy_line(5))

    def test_rejects_lowered_input(self):
        with pytest.raises(ValueError, match="abstract"):
            route_shuffle(lower(build_qaoa(gen_sk(4))), build_line(4), strategy_line(4))

    def test_rejects_wide_circuit(self):
        with pytest.raises(ValueError, match="exceeds"):
            route_shuffle(build_qaoa(gen_sk(5)), build_line(4), strategy_line(4))

    def test_incomplete_strategy_fails(self):
        cmap = build_line(4)
        stuck = SwapStrategy(cmap, (SwapLayer(((0, 1),)),), name="stuck", layer_bound=1)
        with pytest.raises(RoutingError, match="interactions left"):
            route_shuffle(build_qaoa(gen_sk(4)), cmap, stuck)


class TestShuffleRouter:
    @pytest.mark.parametrize(
        "topology", [LineTopology(n=7), GridTopology(size=3), BusnnnTopology(buses=2, bus_size=4)]
    )
    def test_routes_sk(self, topology):
        circuit = build_qaoa(gen_sk(7))
        result = ShuffleRouter().route(circuit, topology)
        check_routing(circuit, result, topology.coupling_map)

    def test_deterministic(self):
        circuit = build_qaoa(gen_sk(6))
        first = ShuffleRouter(seed=1).route(circuit, LineTopology(n=6))
        second = ShuffleRouter(seed=2).route(circuit, LineTopology(n=6))
        assert first.circuit == second.circuit

    def test_rejects_unsupported_topology(self):
        with pytest.raises(ValueError, match="No full-shuffle strategy"):
            ShuffleRouter().route(build_qaoa(gen_sk(4)), AspenTopology(octagon_rows=1, octagon_cols=1))

    def test_rejects_small_topology(self):
        with pytest.raises(ValueError, match="exceeds"):
            ShuffleRouter().route(build_qaoa(gen_sk(5)), LineTopology(n=4))
