from circuits.circuit import Circuit, CircuitLevel
from circuits.gate import LOWERED_KINDS, Gate, GateKind


class CircuitParseError(ValueError):
    """Malformed circuit text, with the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"Line {line_number}: {message}")
        self.line_number = line_number


def serialize(circuit: Circuit) -> str:
    """Text form: a `qubits N` and `level` header, then one gate per line."""
    lines = [f"qubits {circuit.width}", f"level {circuit.level.value}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError as e:
        raise CircuitParseError(line_number, f"invalid integer {token!r}") from e
    if value < 0:
        raise CircuitParseError(line_number, f"negative qubit index {value}")
    return value


def _parse_angle(token: str, line_number: int) -> float:
    try:
        return float(token)
    except ValueError as e:
        raise CircuitParseError(line_number, f"invalid angle {token!r}") from e


def _parse_gate(tokens: list[str], line_number: int) -> Gate:
    kind = GateKind.get_by_mnemonic(tokens[0])
    if kind is None:
        raise CircuitParseError(line_number, f"unknown gate {tokens[0]!r}")

    expected = kind.arity + (1 if kind.parametric else 0)
    operands = tokens[1:]
    if len(operands) != expected:
        raise CircuitParseError(
            line_number, f"{kind.mnemonic} expects {expected} operand(s), got {len(operands)}"
        )

    angle = _parse_angle(operands.pop(0), line_number) if kind.parametric else None
    qubits = tuple(_parse_int(token, line_number) for token in operands)
    try:
        return Gate(kind, qubits, angle)
    except ValueError as e:
        raise CircuitParseError(line_number, str(e)) from e


def parse(text: str) -> Circuit:
    """Parse the subset emitted by serialize; blank lines and # comments are skipped."""
    width: int | None = None
    level = CircuitLevel.ABSTRACT
    gates: list[Gate] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if tokens[0] == "qubits":
            if width is not None or gates:
                raise CircuitParseError(line_number, "qubits header must come first, once")
            if len(tokens) != 2:
                raise CircuitParseError(line_number, "expected 'qubits N'")
            width = _parse_int(tokens[1], line_number)
            continue

        if tokens[0] == "level":
            if gates:
                raise CircuitParseError(line_number, "level header must precede the gates")
            if len(tokens) != 2:
                raise CircuitParseError(line_number, "expected 'level abstract|lowered'")
            try:
                level = CircuitLevel(tokens[1])
            except ValueError as e:
                raise CircuitParseError(line_number, f"unknown level {tokens[1]!r}") from e
            continue

        gate = _parse_gate(tokens, line_number)
        if width is None:
            raise CircuitParseError(line_number, "missing 'qubits N' header")
        if any(q >= width for q in gate.qubits):
            raise CircuitParseError(line_number, f"qubit out of range for width {width}")
        if level is CircuitLevel.LOWERED and gate.kind not in LOWERED_KINDS:
            raise CircuitParseError(
                line_number, f"lowered circuits allow only cnot/rx/rz, got {gate.kind.mnemonic}"
            )
        gates.append(gate)

    if width is None:
        raise CircuitParseError(1, "missing 'qubits N' header")

    return Circuit(width=width, gates=tuple(gates), level=level)
