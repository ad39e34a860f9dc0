import networkx as nx
import numpy as np
import pytest

from problem_graphs.barabasi_albert_graph_generator import (
    BarabasiAlbertGraphGenerator,
    ba_shape,
    gen_ba,
)
from problem_graphs.erdos_renyi_graph_generator import (
    ErdosRenyiGraphGenerator,
    edges_for_density,
    gen_er,
)
from problem_graphs.graph_generator import make_rng
from problem_graphs.problem_graph import ProblemGraph, density
from problem_graphs.regular_graph_generator import RegularGraphGenerator, gen_regular
from problem_graphs.sherrington_kirkpatrick_graph_generator import (
    SherringtonKirkpatrickGraphGenerator,
    gen_sk,
)
from problem_graphs.watts_strogatz_graph_generator import (
    WattsStrogatzGraphGenerator,
    gen_ws,
)


class TestMakeRng:
    def test_same_seed_same_stream(self):
        assert make_rng(11).integers(1000, size=5).tolist() == (
            make_rng(11).integers(1000, size=5).tolist()
        )

    def test_uses_pcg64(self):
        assert isinstance(make_rng(0).bit_generator, np.random.PCG64)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_rejects_out_of_range_seed(self, seed):
        with pytest.raises(ValueError, match="64-bit"):
            make_rng(seed)


class TestErdosRenyi:
    def test_exact_edge_count(self):
        graph = gen_er(10, 17, seed=3)
        assert graph.n == 10
        assert graph.m == 17

    def test_deterministic(self):
        assert gen_er(12, 20, seed=5) == gen_er(12, 20, seed=5)

    def test_matches_networkx_draw_from_same_stream(self):
        expected = nx.gnm_random_graph(10, 17, seed=make_rng(3))
        assert gen_er(10, 17, seed=3) == ProblemGraph.from_pairs(10, expected.edges())

    def test_full_edge_count_is_complete(self):
        assert gen_er(4, 6, seed=0) == gen_sk(4)

    def test_too_many_edges(self):
        with pytest.raises(ValueError, match="Edge count"):
            gen_er(4, 7, seed=0)

    def test_edges_for_density(self):
        assert edges_for_density(10, 0.4) == 18
        assert edges_for_density(5, 1.0) == 10

    def test_generator_by_density(self):
        generator = ErdosRenyiGraphGenerator(density=0.3)
        graph = generator.generate(20, seed=1)
        assert graph.m == edges_for_density(20, 0.3)

    def test_generator_needs_exactly_one_size_parameter(self):
        with pytest.raises(ValueError, match="exactly one"):
            ErdosRenyiGraphGenerator()
        with pytest.raises(ValueError, match="exactly one"):
            ErdosRenyiGraphGenerator(edges=3, density=0.1)

    def test_generator_rejects_bad_density(self):
        with pytest.raises(ValueError, match=r"\[0, 1\]"):
            ErdosRenyiGraphGenerator(density=1.5)

    def test_check_size_rejects_overfull(self):
        with pytest.raises(ValueError, match="do not fit"):
            ErdosRenyiGraphGenerator(edges=10).check_size(4)


class TestRegular:
    def test_degree_three_on_four_is_k4(self):
        assert gen_regular(4, 3, seed=0) == gen_sk(4)

    @pytest.mark.parametrize("n, d", [(10, 3), (20, 3), (16, 12), (13, 12)])
    def test_every_vertex_has_degree(self, n, d):
        graph = gen_regular(n, d, seed=2)
        assert graph.degrees().tolist() == [d] * n
        assert graph.is_connected()

    def test_draws_from_networkx_with_pcg64_stream(self, mocker):
        spy = mocker.spy(nx, "random_regular_graph")
        gen_regular(10, 3, seed=1)
        assert spy.call_args.args[:2] == (3, 10)
        assert isinstance(spy.call_args.kwargs["seed"], np.random.Generator)

    def test_deterministic(self):
        assert gen_regular(14, 3, seed=9) == gen_regular(14, 3, seed=9)

    def test_three_regular_density(self):
        assert density(gen_regular(20, 3, seed=0)) == pytest.approx(3 / 19)

    @pytest.mark.parametrize("n, d", [(5, 3), (3, 3), (4, 0)])
    def test_impossible_shapes(self, n, d):
        with pytest.raises(ValueError):
            gen_regular(n, d, seed=0)

    def test_generator_requires_degree(self):
        with pytest.raises(ValueError, match="'degree'"):
            RegularGraphGenerator()

    def test_check_size_parity(self):
        generator = RegularGraphGenerator(degree=3)
        with pytest.raises(ValueError, match="No 3-regular graph"):
            generator.check_size(7)


class TestWattsStrogatz:
    @pytest.mark.parametrize("seed", [0, 1, 42])
    def test_keeps_two_n_edges(self, seed):
        assert gen_ws(20, seed).m == 40

    def test_matches_networkx_draw_from_same_stream(self):
        expected = nx.watts_strogatz_graph(20, 4, 0.5, seed=make_rng(7))
        assert gen_ws(20, seed=7) == ProblemGraph.from_pairs(20, expected.edges())

    def test_five_vertices_is_k5(self):
        assert gen_ws(5, seed=3) == gen_sk(5)

    def test_deterministic(self):
        assert gen_ws(15, seed=4) == gen_ws(15, seed=4)

    def test_rewires_something(self):
        ring = {(min(u, (u + k) % 30), max(u, (u + k) % 30)) for u in range(30) for k in (1, 2)}
        assert gen_ws(30, seed=0).edges != frozenset(ring)

    def test_too_small(self):
        with pytest.raises(ValueError, match="n > 4"):
            gen_ws(4, seed=0)
        with pytest.raises(ValueError, match="size >= 5"):
            WattsStrogatzGraphGenerator().generate(4)


class TestBarabasiAlbert:
    def test_shape_for_four(self):
        assert ba_shape(4) == (2, 2, 1)

    def test_four_is_a_tree(self):
        graph = gen_ba(4, seed=0)
        assert graph.n == 4
        assert graph.m == 3
        assert graph.is_connected()

    def test_twenty_vertices(self):
        star, attached, per_node = ba_shape(20)
        graph = gen_ba(20, seed=6)
        assert graph.n == star + attached == 20
        assert graph.m == (star - 1) + attached * per_node

    def test_matches_networkx_draw_from_same_stream(self):
        star, attached, per_node = ba_shape(20)
        expected = nx.barabasi_albert_graph(
            star + attached,
            per_node,
            seed=make_rng(2),
            initial_graph=nx.star_graph(star - 1),
        )
        assert gen_ba(20, seed=2) == ProblemGraph.from_pairs(20, expected.edges())

    @pytest.mark.parametrize("seed", range(5))
    def test_hub_degree_dominates_median(self, seed):
        degrees = gen_ba(100, seed).degrees()
        assert degrees.max() >= 2 * np.median(degrees)

    def test_node_count_matches_generated(self):
        generator = BarabasiAlbertGraphGenerator()
        for size in (4, 7, 10, 21):
            assert generator.generate(size, seed=1).n == generator.node_count(size)

    def test_deterministic(self):
        assert gen_ba(16, seed=8) == gen_ba(16, seed=8)

    def test_too_small(self):
        with pytest.raises(ValueError, match="n >= 4"):
            gen_ba(3, seed=0)


class TestSherringtonKirkpatrick:
    def test_complete(self):
        graph = gen_sk(6)
        assert graph.m == 15
        assert density(graph) == 1.0

    def test_generator_ignores_seed(self):
        generator = SherringtonKirkpatrickGraphGenerator()
        assert generator.generate(5, seed=1) == generator.generate(5, seed=2)

    def test_takes_no_parameters(self):
        with pytest.raises(ValueError, match="takes no parameters"):
            SherringtonKirkpatrickGraphGenerator(degree=3)

    def test_too_small(self):
        with pytest.raises(ValueError, match="n >= 2"):
            gen_sk(1)
