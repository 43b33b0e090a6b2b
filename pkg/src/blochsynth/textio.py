"""
Line-based circuit text format.

    # comment
    qubits 3
    h 1
    tdg 1
    cx 2 1
    rz 3/4 0

First non-comment line declares the width; then one gate per line, lowercase
mnemonic first.  Rotation gates take the angle (a reduced fraction of pi,
`3/4` = 3pi/4, negatives allowed) before the qubit index.  parse/emit are
exact inverses on every circuit this package produces.
"""
from __future__ import annotations

from .angles import Angle
from .ir import Circuit, Gate, GateKind

_KINDS = {k.value: k for k in GateKind}


class CircuitParseError(ValueError):
    """Malformed circuit text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def emit_circuit(c: Circuit, header: tuple[str, ...] = ()) -> str:
    """Render a circuit to text; header lines are emitted as leading comments."""
    lines = [f"# {text}" for text in header]
    lines.append(f"qubits {c.n_qubits}")
    for g in c.gates:
        if g.kind.takes_angle:
            lines.append(f"{g.kind.value} {g.angle} {g.qubits[0]}")
        else:
            lines.append(f"{g.kind.value} {' '.join(str(q) for q in g.qubits)}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Parse circuit text, raising CircuitParseError with a line number on bad input."""
    n_qubits = None
    gates: list[Gate] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n_qubits is None:
            if fields[0] != "qubits" or len(fields) != 2:
                raise CircuitParseError(line_no, "expected 'qubits N' before any gate")
            n_qubits = _parse_int(fields[1], line_no, "qubit count")
            if n_qubits < 1:
                raise CircuitParseError(line_no, "qubit count must be positive")
            continue
        kind = _KINDS.get(fields[0])
        if kind is None:
            raise CircuitParseError(line_no, f"unknown gate mnemonic {fields[0]!r}")
        args = fields[1:]
        angle = None
        if kind.takes_angle:
            if not args:
                raise CircuitParseError(line_no, f"{kind.value} needs an angle")
            try:
                angle = Angle.parse(args[0])
            except ValueError as exc:
                raise CircuitParseError(line_no, f"bad angle {args[0]!r}: {exc}") from None
            args = args[1:]
        if len(args) != kind.n_qubits:
            raise CircuitParseError(line_no, f"{kind.value} takes {kind.n_qubits} qubit(s), got {len(args)}")
        qubits = tuple(_parse_int(a, line_no, "qubit index") for a in args)
        if any(q < 0 or q >= n_qubits for q in qubits):
            raise CircuitParseError(line_no, f"qubit index out of range for {n_qubits} qubits")
        try:
            gates.append(Gate(kind, qubits, angle))
        except ValueError as exc:
            raise CircuitParseError(line_no, str(exc)) from None
    if n_qubits is None:
        raise CircuitParseError(1, "empty circuit text (missing 'qubits N')")
    return Circuit(n_qubits, tuple(gates))


def _parse_int(text: str, line_no: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CircuitParseError(line_no, f"bad {what} {text!r}") from None
