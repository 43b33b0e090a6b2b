"""
Exact statevector/unitary simulation for small circuits (verification oracle).

Conventions, fixed once and used everywhere:
    - Qubit 0 is the least significant bit of the state index.
    - unitary_of applies gates left to right: unitary_of(a + b) = U_b . U_a.
    - RZ(theta) = diag(e^{-i theta/2}, e^{+i theta/2}), so RZ(pi) = -i Z.
    - Named Z, S, T are diag(1, e^{i theta}): equal to RZ only up to global phase.

Equivalence helpers come in three strengths: exact, up to one global phase,
and up to one phase per column (the "relative phase" freedom that the
symmetric templates exploit for Fredkin/Miller/CV constructions).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin, sqrt

import numpy as np

from .ir import Circuit, Gate, GateKind

MAX_SIM_QUBITS = 10

_S2 = 1 / sqrt(2)
_MATS_1Q = {
    GateKind.I: np.eye(2, dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _S2,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, np.exp(1j * pi / 4)]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, np.exp(-1j * pi / 4)]], dtype=complex),
    GateKind.SX: np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex) / 2,
    GateKind.SXDG: np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]], dtype=complex) / 2,
}


def gate_matrix(g: Gate) -> np.ndarray:
    """The 2x2 or 4x4 unitary of a single gate (two-qubit: qubit order as given, LSB first)."""
    if g.kind in _MATS_1Q:
        return _MATS_1Q[g.kind]
    if g.kind == GateKind.RZ:
        th = float(g.angle)
        return np.array([[np.exp(-1j * th / 2), 0], [0, np.exp(1j * th / 2)]], dtype=complex)
    if g.kind == GateKind.RX:
        th = float(g.angle)
        return np.array([[cos(th / 2), -1j * sin(th / 2)],
                         [-1j * sin(th / 2), cos(th / 2)]], dtype=complex)
    raise ValueError(f"no dense matrix for {g.kind.value}")


@dataclass(frozen=True)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2 ** self.n_qubits:
            raise ValueError(f"need {2 ** self.n_qubits} amplitudes, got {amps.shape[0]}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> "StateVector":
        amps = np.zeros(2 ** n_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _apply_1q(state: np.ndarray, mat: np.ndarray, q: int, n: int) -> np.ndarray:
    # Qubit q = bit q of the flat index = axis n-1-q of the C-order tensor.
    axis = n - 1 - q
    state = state.reshape([2] * n)
    state = np.tensordot(mat, state, axes=([1], [axis]))
    return np.moveaxis(state, 0, axis).reshape(-1)

def _apply_2q(state: np.ndarray, g: Gate, n: int) -> np.ndarray:
    state = state.reshape([2] * n).copy()
    a0, a1 = n - 1 - g.qubits[0], n - 1 - g.qubits[1]

    def sel(v0, v1):
        idx = [slice(None)] * n
        idx[a0], idx[a1] = v0, v1
        return tuple(idx)

    if g.kind == GateKind.CX:
        tmp = state[sel(1, 0)].copy()
        state[sel(1, 0)] = state[sel(1, 1)]
        state[sel(1, 1)] = tmp
    elif g.kind == GateKind.CZ:
        state[sel(1, 1)] *= -1
    elif g.kind == GateKind.SWAP:
        tmp = state[sel(0, 1)].copy()
        state[sel(0, 1)] = state[sel(1, 0)]
        state[sel(1, 0)] = tmp
    else:
        raise ValueError(f"unknown two-qubit kind {g.kind.value}")
    return state.reshape(-1)


def apply(c: Circuit, state: StateVector) -> StateVector:
    """Apply every gate of c in order to the state."""
    if c.n_qubits != state.n_qubits:
        raise ValueError(f"circuit on {c.n_qubits} qubits, state on {state.n_qubits}")
    amps = state.amplitudes.copy()
    for g in c.gates:
        if g.kind.n_qubits == 1:
            amps = _apply_1q(amps, gate_matrix(g), g.qubits[0], c.n_qubits)
        else:
            amps = _apply_2q(amps, g, c.n_qubits)
    return StateVector(c.n_qubits, amps)


def unitary_of(c: Circuit) -> np.ndarray:
    """Full 2^n x 2^n unitary of the circuit (gates applied left to right)."""
    if c.n_qubits > MAX_SIM_QUBITS:
        raise ValueError(f"unitary_of supports at most {MAX_SIM_QUBITS} qubits")
    dim = 2 ** c.n_qubits
    cols = np.eye(dim, dtype=complex)
    for g in c.gates:
        if g.kind.n_qubits == 1:
            mat = gate_matrix(g)
            axis = c.n_qubits - 1 - g.qubits[0]
            cols = np.tensordot(mat, cols.reshape([2] * c.n_qubits + [dim]), axes=([1], [axis]))
            cols = np.moveaxis(cols, 0, axis).reshape(dim, dim)
        else:
            for k in range(dim):
                cols[:, k] = _apply_2q(np.ascontiguousarray(cols[:, k]), g, c.n_qubits)
    return cols


def equiv_exact(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> bool:
    return u.shape == v.shape and bool(np.max(np.abs(u - v)) <= tol)


def equiv_up_to_global_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-10) -> bool:
    """True iff u = lambda * v for one unit-modulus lambda (within tol elementwise)."""
    if u.shape != v.shape:
        return False
    flat = np.abs(v).reshape(-1)
    idx = int(np.argmax(flat))          # row-major first on ties
    if flat[idx] <= tol:
        return bool(np.max(np.abs(u)) <= tol)
    lam = u.reshape(-1)[idx] / v.reshape(-1)[idx]
    if abs(abs(lam) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(u - lam * v)) <= tol)


def equiv_up_to_relative_phase(u: np.ndarray, v: np.ndarray, tol: float = 1e-9) -> bool:
    """True iff u = v . diag(lambdas) with all |lambda_k| = 1 (one phase per column)."""
    if u.shape != v.shape:
        return False
    for k in range(u.shape[1]):
        col_v, col_u = v[:, k], u[:, k]
        idx = int(np.argmax(np.abs(col_v)))
        if abs(col_v[idx]) <= tol:
            if np.max(np.abs(col_u)) > tol:
                return False
            continue
        lam = col_u[idx] / col_v[idx]
        if abs(abs(lam) - 1.0) > tol or np.max(np.abs(col_u - lam * col_v)) > tol:
            return False
    return True


@dataclass(frozen=True)
class SignedPauli:
    sign: int            # +1 or -1
    kind: GateKind       # X, Y, or Z

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}{self.kind.value.upper()}"


def clifford_conjugate(c: Circuit, pauli: Circuit | Gate | GateKind, tol: float = 1e-10) -> SignedPauli:
    """Identify C . P . C^dagger as a signed Pauli (error if it is not one)."""
    if isinstance(pauli, GateKind):
        pauli = Circuit(1, (Gate(pauli, (0,)),))
    elif isinstance(pauli, Gate):
        pauli = Circuit(1, (pauli,))
    if c.n_qubits != 1 or pauli.n_qubits != 1:
        raise ValueError("clifford_conjugate works on single-qubit circuits")
    uc, up = unitary_of(c), unitary_of(pauli)
    result = uc @ up @ uc.conj().T
    for kind in (GateKind.X, GateKind.Y, GateKind.Z):
        for sign in (1, -1):
            if np.max(np.abs(result - sign * _MATS_1Q[kind])) <= tol:
                return SignedPauli(sign, kind)
    raise ValueError("conjugation result is not a signed Pauli (C is not Clifford?)")


@dataclass(frozen=True)
class TruthTable:
    n_controls: int
    outputs: tuple[bool, ...]

    def __post_init__(self):
        if len(self.outputs) != 2 ** self.n_controls:
            raise ValueError(f"need {2 ** self.n_controls} outputs, got {len(self.outputs)}")

    def complement(self) -> "TruthTable":
        return TruthTable(self.n_controls, tuple(not o for o in self.outputs))


def template_wires(n_qubits: int) -> tuple[tuple[int, ...], int]:
    """(control wires ascending = c1..c(n-1), target wire) for the symmetric convention."""
    target = n_qubits // 2
    controls = tuple(w for w in range(n_qubits) if w != target)
    return controls, target


def boolean_action(c: Circuit, n_controls: int, tol: float = 1e-9) -> TruthTable:
    """Extract the Boolean function a circuit computes into the target wire.

    Control wires and the target follow the template convention (target =
    middle wire, controls ascending; control_i = bit i-1 of the row index).
    Errors if any basis input leaves the target in superposition or moves
    a control.
    """
    if c.n_qubits != n_controls + 1:
        raise ValueError(f"circuit has {c.n_qubits} qubits, expected {n_controls + 1}")
    controls, target = template_wires(c.n_qubits)
    outputs = []
    for row in range(2 ** n_controls):
        index = sum(((row >> i) & 1) << controls[i] for i in range(n_controls))
        final = apply(c, StateVector.basis(c.n_qubits, index))
        out_bit = None
        for bit in (0, 1):
            expected = index | (bit << target)
            if abs(abs(final.amplitudes[expected]) ** 2 - 1.0) <= tol:
                out_bit = bit
                break
        if out_bit is None:
            raise ValueError(f"not a Boolean operator: input row {row:0{n_controls}b} "
                             "leaves target in superposition or moves a control")
        outputs.append(bool(out_bit))
    return TruthTable(n_controls, tuple(outputs))


def reference_unitary(kind: str, n_qubits: int) -> np.ndarray:
    """Textbook reference matrices used as oracles (cv, cvdg, cswap, ccx...)."""
    controls, target = template_wires(n_qubits)
    dim = 2 ** n_qubits
    if kind in ("cv", "cvdg"):
        block = _MATS_1Q[GateKind.SX if kind == "cv" else GateKind.SXDG]
        u = np.eye(dim, dtype=complex)
        for index in range(dim):
            if all((index >> w) & 1 for w in controls) and not (index >> target) & 1:
                flipped = index | (1 << target)
                u[index, index], u[flipped, index] = block[0, 0], block[1, 0]
                u[index, flipped], u[flipped, flipped] = block[0, 1], block[1, 1]
        return u
    if kind == "ccx":
        u = np.zeros((dim, dim))
        for index in range(dim):
            flip = all((index >> w) & 1 for w in controls)
            u[index ^ (flip << target), index] = 1.0
        return u.astype(complex)
    raise ValueError(f"no reference unitary named {kind!r}")


def permutation_unitary(perm: tuple[int, ...]) -> np.ndarray:
    """Permutation matrix P with P|i> = |perm[i]>."""
    dim = len(perm)
    u = np.zeros((dim, dim), dtype=complex)
    for src, dst in enumerate(perm):
        u[dst, src] = 1.0
    return u
