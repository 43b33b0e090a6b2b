"""Shared helpers for the test suite."""
import numpy as np

from blochsynth.angles import Angle
from blochsynth.ir import Circuit, Gate, GateKind

# Kinds drawn for random Clifford+T circuits (RZ included with dyadic angles).
_ONE_QUBIT = (GateKind.I, GateKind.X, GateKind.SX, GateKind.SXDG, GateKind.Y,
              GateKind.Z, GateKind.H, GateKind.S, GateKind.SDG, GateKind.T,
              GateKind.TDG)
_TWO_QUBIT = (GateKind.CX, GateKind.CZ, GateKind.SWAP)


def random_circuit(rng: np.random.Generator, n_qubits: int, n_gates: int,
                   with_rz: bool = False) -> Circuit:
    """A random circuit over the full IR, deterministic given the rng."""
    gates = []
    for _ in range(n_gates):
        if n_qubits >= 2 and rng.random() < 0.35:
            a, b = rng.choice(n_qubits, size=2, replace=False)
            gates.append(Gate(_TWO_QUBIT[rng.integers(len(_TWO_QUBIT))],
                              (int(a), int(b))))
        elif with_rz and rng.random() < 0.25:
            num = int(rng.integers(-64, 65))
            gates.append(Gate(GateKind.RZ, (int(rng.integers(n_qubits)),),
                              Angle(num, 64)))
        else:
            kind = _ONE_QUBIT[rng.integers(len(_ONE_QUBIT))]
            gates.append(Gate(kind, (int(rng.integers(n_qubits)),)))
    return Circuit(n_qubits, tuple(gates))
