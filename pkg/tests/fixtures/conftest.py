import json
import math

import pytest

from circuits.circuit import Circuit
from circuits.gate import Gate, GateKind
from circuits.qaoa import QaoaParams, build_qaoa
from problem_graphs.graph_generator import make_rng
from problem_graphs.problem_graph import ProblemGraph
from tests.test_constants import (
    BENCH_CONFIG,
    TRAIL_N,
    TRAIL_ORDER,
    RX_ANGLE,
    ZZ_ANGLE,
)


@pytest.fixture
def mock_home_dir(tmp_path, monkeypatch):
    home_dir = tmp_path / "home"
    home_dir.mkdir()
    monkeypatch.setenv("HOME", str(home_dir))
    return home_dir


@pytest.fixture
def mock_env(monkeypatch):
    def _mock_env(**kwargs):
        for key, value in kwargs.items():
            monkeypatch.setenv(key, value)

    return _mock_env


@pytest.fixture
def trail_graph():
    return ProblemGraph.from_pairs(TRAIL_N, TRAIL_ORDER)


@pytest.fixture
def triangle_graph():
    return ProblemGraph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k2_circuit():
    return build_qaoa(ProblemGraph.from_pairs(2, [(0, 1)]), QaoaParams())


@pytest.fixture
def bench_config_file(tmp_path):
    path = tmp_path / "bench.json"
    path.write_text(json.dumps(BENCH_CONFIG, indent=2))
    return path


@pytest.fixture
def trail_circuit():
    """QAOA circuit for the five-edge instance with its ZZ terms in trail order."""
    gates = [Gate.h(q) for q in range(TRAIL_N)]
    gates += [Gate.zz(ZZ_ANGLE, a, b) for a, b in TRAIL_ORDER]
    gates += [Gate.rx(RX_ANGLE, q) for q in range(TRAIL_N)]
    return Circuit.from_gates(TRAIL_N, gates)


@pytest.fixture
def random_circuit():
    def _random_circuit(width: int, count: int, seed: int, kinds=tuple(GateKind)) -> Circuit:
        rng = make_rng(seed)
        gates = []
        for _ in range(count):
            kind = kinds[int(rng.integers(len(kinds)))]
            qubits = tuple(int(q) for q in rng.choice(width, size=kind.arity, replace=False))
            angle = float(rng.uniform(-math.pi, math.pi)) if kind.parametric else None
            gates.append(Gate(kind, qubits, angle))
        return Circuit.from_gates(width, gates)

    return _random_circuit
