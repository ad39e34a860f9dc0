import pytest

from circuits.gate import LOWERED_KINDS, Gate, GateKind


class TestGateKind:
    def test_get_by_mnemonic(self):
        assert GateKind.get_by_mnemonic("cnot") is GateKind.CNOT
        assert GateKind.get_by_mnemonic("ZZ") is GateKind.ZZ
        assert GateKind.get_by_mnemonic("toffoli") is None

    def test_arity_and_parameters(self):
        assert GateKind.SWAP.is_two_qubit
        assert not GateKind.SWAP.parametric
        assert GateKind.RZ.parametric
        assert not GateKind.H.is_two_qubit

    def test_lowered_kinds(self):
        assert LOWERED_KINDS == {GateKind.CNOT, GateKind.RX, GateKind.RZ}


class TestGate:
    def test_constructors(self):
        assert Gate.cnot(0, 1) == Gate(GateKind.CNOT, (0, 1))
        assert Gate.zz(0.8, 2, 1).angle == 0.8
        assert Gate.rx(1, 0).angle == 1.0

    def test_two_qubit_operands_must_differ(self):
        with pytest.raises(ValueError, match="must differ"):
            Gate.cnot(1, 1)

    def test_wrong_arity(self):
        with pytest.raises(ValueError, match="acts on 1 qubit"):
            Gate(GateKind.H, (0, 1))

    def test_negative_qubit(self):
        with pytest.raises(ValueError, match="non-negative"):
            Gate.h(-1)

    def test_angle_presence(self):
        with pytest.raises(ValueError, match="needs an angle"):
            Gate(GateKind.RZ, (0,))
        with pytest.raises(ValueError, match="takes no angle"):
            Gate(GateKind.SWAP, (0, 1), 0.5)

    def test_remap(self):
        assert Gate.zz(0.3, 0, 2).remap([5, 6, 7]) == Gate.zz(0.3, 5, 7)
        assert Gate.h(1).remap({1: 4}) == Gate.h(4)

    def test_str(self):
        assert str(Gate.cnot(0, 1)) == "cnot 0 1"
        assert str(Gate.rz(0.5, 3)) == "rz 0.5 3"
