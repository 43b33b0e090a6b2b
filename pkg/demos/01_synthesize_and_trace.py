"""
Synthesizing multi-control gates and reading their phase traces
===============================================================

Every gate here comes from one symmetric template: H on the target, a
palindromic CNOT schedule, and one Z-rotation slot between CNOTs.  The
solver picks the rotation angles; the tracker then replays the design
analytically, one phase per event, so you can watch the target reach pi
exactly on the inputs where the function is true.
"""

from blochsynth import render_trace_table, synth_detailed
from blochsynth.textio import emit_circuit

# Synthesize a Toffoli (2-control AND) on three qubits.  The target sits
# on the middle wire; wires 0 and 2 are controls c1 and c2.
result = synth_detailed("toffoli", 3)

print("Toffoli on 3 qubits")
print("thetas:", " ".join(a.pi_string() for a in result.assignment.thetas))
print("ax2:   ", result.assignment.ax2.value)
print()
print(emit_circuit(result.circuit))

# The analytical trace: one row per control input.  A theta column adds
# its angle; a CNOT column negates the running phase when its control is
# 1 (a dash marks an inactive CNOT).  The final H maps phase 0 -> |0>
# and pi -> |1>, which is the output column.
print(render_trace_table(result.circuit, labels=result.trace_labels()))

# The same machinery covers the whole operator family.  NAND reuses the
# AND angles and appends a -Z axis correction; OR and NOR share angles
# the same way.  Each synthesized circuit is verified against its truth
# table (or reference unitary) before it is returned.
for kind in ("and", "nand", "or", "nor", "implication", "inhibition"):
    r = synth_detailed(kind, 3)
    thetas = " ".join(a.pi_string().rjust(4) for a in r.assignment.thetas)
    print(f"{kind:12s} thetas: {thetas}   ax2: {r.assignment.ax2.value}")

# Controlled-sqrt(X) targets a quarter turn (pi/2) instead of pi, so its
# angles halve relative to AND; its adjoint just flips every sign.
print()
for kind in ("cv", "cvdg"):
    r = synth_detailed(kind, 2)
    print(f"{kind:5s} thetas:", " ".join(a.pi_string() for a in r.assignment.thetas))
