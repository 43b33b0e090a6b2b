"""
Textbook reference constructions for the compare benchmark.

These build each operator the conventional way — true multi-controlled-X
gates (the 6-CNOT Toffoli, parity-gadget phase ladders above two controls)
with X dressings for the complemented variants — so their transpiled cost
can be set against the template-based designs.  Every construction is
checked at build time against the exact target unitary (these are true
gates, not relative-phase ones, so equality holds up to global phase).
"""
from __future__ import annotations

from itertools import combinations

from .angles import PI, Angle
from .ir import Circuit, Gate, cx, diagonal_gate, h, x
from .ir import t as t_gate, tdg
from .simulator import (equiv_up_to_global_phase, permutation_unitary,
                        reference_unitary, template_wires, unitary_of)
from .synthesis import (OPERATOR_RANGES, BooleanSpec, SynthVerificationError,
                        fredkin_permutation, miller_permutation)


def controlled_phase(angle: Angle, wires: tuple[int, ...]) -> tuple[Gate, ...]:
    """Phase gadget: e^{i*angle} on the all-ones subspace of the given wires.

    One diagonal rotation of +-angle/2^(k-1) per nonempty wire subset, each
    conjugated by a CNOT chain that collects the subset parity.
    """
    k = len(wires)
    base = Angle(angle.num, angle.den * 2 ** (k - 1))
    gates: list[Gate] = []
    for size in range(1, k + 1):
        rotation = base if size % 2 else -base
        for subset in combinations(sorted(wires), size):
            chain = [cx(w, subset[-1]) for w in subset[:-1]]
            gates += chain + [diagonal_gate(rotation, subset[-1])] + chain[::-1]
    return tuple(gates)


def _textbook_ccx(c1: int, c2: int, t: int) -> tuple[Gate, ...]:
    """The standard 6-CNOT, 7-T Toffoli."""
    return (h(t), cx(c2, t), tdg(t), cx(c1, t), t_gate(t), cx(c2, t),
            tdg(t), cx(c1, t), t_gate(c2), t_gate(t), h(t),
            cx(c1, c2), t_gate(c1), tdg(c2), cx(c1, c2))


def _multi_controlled_x(controls: tuple[int, ...], target: int) -> tuple[Gate, ...]:
    if len(controls) == 1:
        return (cx(controls[0], target),)
    if len(controls) == 2:
        return _textbook_ccx(controls[0], controls[1], target)
    return (h(target),) + controlled_phase(PI, controls + (target,)) + (h(target),)


def naive_synth(kind: str, n: int) -> Circuit:
    """Build a named operator the textbook way, on the template's wires."""
    kind = kind.lower()
    if kind not in OPERATOR_RANGES:
        raise ValueError(f"unknown operator {kind!r}")
    if n not in OPERATOR_RANGES[kind]:
        raise ValueError(f"{kind} supports n in {list(OPERATOR_RANGES[kind])}, got {n}")
    controls, target = template_wires(n)
    gates, expected = _build(kind, n, controls, target)
    circuit = Circuit(n, gates)
    if not equiv_up_to_global_phase(unitary_of(circuit), expected):
        raise SynthVerificationError(f"naive {kind}({n}) does not match its target unitary")
    return circuit


def _build(kind, n, controls, target):
    if kind in ("cv", "cvdg"):
        phase = Angle(1, 2) if kind == "cv" else Angle(-1, 2)
        gates = (h(target),) + controlled_phase(phase, controls + (target,)) + (h(target),)
        return gates, reference_unitary(kind, n)
    if kind == "fredkin":
        high = target + 1
        inner = _multi_controlled_x(tuple(w for w in controls if w != high) + (high,), target)
        bridge = cx(target, high)
        return (bridge,) + inner + (bridge,), permutation_unitary(fredkin_permutation(n))
    if kind == "miller":
        gates = (_multi_controlled_x((1, 2), 0) + _multi_controlled_x((0, 2), 1)
                 + _multi_controlled_x((0, 1), 2))
        return gates, permutation_unitary(miller_permutation(n))
    # Boolean family: X-dress the complemented controls around a true
    # multi-controlled X, plus a target X when the function is complemented.
    dress, flip = _DRESSINGS[kind]
    dressed = tuple(x(controls[i]) for i in dress(len(controls)))
    gates = dressed + _multi_controlled_x(controls, target) + dressed
    if flip:
        gates += (x(target),)
    perm = _boolean_permutation(BooleanSpec.named(kind, n - 1), n, controls, target)
    return gates, permutation_unitary(perm)


_DRESSINGS = {
    "toffoli": (lambda m: (), False),
    "and": (lambda m: (), False),
    "nand": (lambda m: (), True),
    "or": (lambda m: range(m), True),
    "nor": (lambda m: range(m), False),
    "implication": (lambda m: (1,), True),
    "inhibition": (lambda m: (1,), False),
}


def _boolean_permutation(spec: BooleanSpec, n: int,
                         controls: tuple[int, ...], target: int) -> tuple[int, ...]:
    perm = []
    for index in range(2 ** n):
        bits = sum((index >> w & 1) << i for i, w in enumerate(controls))
        perm.append(index ^ (spec.outputs[bits] << target))
    return tuple(perm)
