import pytest

from routers.swap_strategy import (
    full_connectivity_layers,
    full_connectivity_rounds,
    grid_round_bound,
    l_swap,
    strategy_busnnn,
    strategy_grid,
    strategy_line,
    swaps_to_full_connectivity,
)


class TestLineStrategy:
    @pytest.mark.integration
    @pytest.mark.timeout(10)
    def test_optimal_for_all_small_lines(self):
        for n in range(3, 65):
            strategy = strategy_line(n)
            assert full_connectivity_layers(strategy) == n - 2, n
            assert swaps_to_full_connectivity(strategy) == l_swap(n), n


class TestBusnnnStrategy:
    @pytest.mark.integration
    @pytest.mark.timeout(10)
    @pytest.mark.parametrize("bus_size", [4, 8])
    @pytest.mark.parametrize("buses", [1, 2, 3, 4, 6])
    def test_exact_layer_count(self, buses, bus_size):
        expected = max(0, (4 * buses - 5) * -(-buses // (buses + 1)))
        assert full_connectivity_layers(strategy_busnnn(buses, bus_size)) == expected


class TestGridStrategy:
    @pytest.mark.integration
    @pytest.mark.timeout(30)
    @pytest.mark.parametrize("size", range(2, 9))
    def test_within_round_bound(self, size):
        assert full_connectivity_rounds(strategy_grid(size)) <= grid_round_bound(size)
