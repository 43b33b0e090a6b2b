"""
Command-line interface: synth, verify, trace, cost, and compare.

Every subcommand prints a deterministic flat block (or the circuit/trace
text itself), so identical invocations are byte-identical.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 internal error.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from .baselines import naive_synth
from .cost import REFERENCE_COSTS, cost_pipeline, report_deviations
from .ir import Circuit
from .layout import Layout, Mapping, heavy_hex, load_layout, parse_layout
from .simulator import (boolean_action, equiv_up_to_relative_phase,
                        permutation_unitary, reference_unitary, unitary_of)
from .synthesis import (BooleanSpec, OPERATOR_RANGES, SynthResult,
                        SynthVerificationError, fredkin_permutation,
                        miller_permutation, synth_detailed, synth_table)
from .textio import emit_circuit, parse_circuit
from .tracker import render_trace_table
from .transpile import DEFAULT_BASIS, load_basis

_BOOLEAN_KINDS = ("toffoli", "and", "nand", "or", "nor", "implication", "inhibition")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except SynthVerificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochsynth",
        description="Layout-aware Clifford+T synthesis of multi-control gates.")
    sub = parser.add_subparsers(dest="command", required=True)

    op = argparse.ArgumentParser(add_help=False)
    op.add_argument("--op", choices=sorted(OPERATOR_RANGES), help="operator name")
    op.add_argument("--n", type=int, help="total qubits (controls + target)")

    place = argparse.ArgumentParser(add_help=False)
    place.add_argument("--layout", metavar="FILE", help="layout file (or bundled name)")
    place.add_argument("--heavy-hex", metavar="RxC", help="generate a heavy-hex layout")
    place.add_argument("--map", metavar="IDS", help="comma-separated physical ids per wire")

    weights = argparse.ArgumentParser(add_help=False)
    weights.add_argument("--weights", metavar="W1,W2,W3,W4", default="1,1,1,1",
                         help="WTQC component weights")
    weights.add_argument("--xc-mode", choices=("swaps", "cnots"), default="swaps",
                         help="count XC as SWAPs or as their CNOTs")
    weights.add_argument("--basis", metavar="FILE", help="native basis definition file")

    p = sub.add_parser("synth", parents=[op], help="synthesize an operator")
    p.add_argument("--table", metavar="BITS", help="explicit truth table, e.g. 0,0,0,1")
    p.add_argument("--out", metavar="FILE", help="write the circuit here instead of stdout")
    p.set_defaults(run=_cmd_synth)

    p = sub.add_parser("verify", parents=[op], help="check a circuit file against an operator")
    p.add_argument("circuit", metavar="FILE", help="circuit file to verify")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("trace", parents=[op], help="print the equator phase trace table")
    p.add_argument("circuit", metavar="FILE", nargs="?", help="circuit file (default: synthesize)")
    p.add_argument("--out", metavar="FILE", help="write the table here instead of stdout")
    p.set_defaults(run=_cmd_trace)

    p = sub.add_parser("cost", parents=[op, place, weights], help="report N1/N2/XC/D and WTQC")
    p.add_argument("circuit", metavar="FILE", nargs="?", help="circuit file (default: synthesize)")
    p.set_defaults(run=_cmd_cost)

    p = sub.add_parser("compare", parents=[op, place, weights],
                       help="cost the template design against the textbook one")
    p.set_defaults(run=_cmd_compare)
    return parser


def _require_op(args) -> tuple[str, int]:
    if not args.op or args.n is None:
        raise ValueError("--op and --n are required here")
    return args.op, args.n


def _synth_from_args(args) -> SynthResult:
    op, n = _require_op(args)
    return synth_detailed(op, n)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve_layout(args) -> Layout | None:
    if args.layout and args.heavy_hex:
        raise ValueError("--layout and --heavy-hex are mutually exclusive")
    if args.heavy_hex:
        rows, sep, cols = args.heavy_hex.partition("x")
        if not sep or not rows.isdigit() or not cols.isdigit():
            raise ValueError(f"--heavy-hex expects RxC, got {args.heavy_hex!r}")
        return heavy_hex(int(rows), int(cols))
    if args.layout:
        path = Path(args.layout)
        if path.exists():
            return load_layout(path)
        bundled = resources.files("blochsynth") / "data" / f"{args.layout}.layout"
        if bundled.is_file():
            return parse_bundled(args.layout)
        raise ValueError(f"layout {args.layout!r} is neither a file nor a bundled name")
    return None


def parse_bundled(name: str) -> Layout:
    """Load one of the layouts shipped in the package data directory."""
    text = (resources.files("blochsynth") / "data" / f"{name}.layout").read_text()
    return parse_layout(text, name=name)


def _parse_weights(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"--weights expects four numbers, got {text!r}")
    w1, w2, w3, w4 = (float(p) for p in parts)
    return (w1, w2, w3, w4)


def _parse_map(text: str) -> Mapping:
    return Mapping(tuple(int(p) for p in text.split(",")))


def _format_weights(weights) -> str:
    return ",".join(f"{w:g}" for w in weights)


def _cmd_synth(args) -> int:
    if args.table and args.op:
        raise ValueError("--op and --table are mutually exclusive")
    if args.table:
        outputs = tuple(bool(int(b)) for b in args.table.split(","))
        result = synth_table(outputs)
        header = [f"op: table {args.table}", f"n: {result.n_qubits}"]
    else:
        result = _synth_from_args(args)
        header = [f"op: {result.kind}", f"n: {result.n_qubits}"]
    if result.assignment is not None:
        header.append("thetas: " + " ".join(str(t) for t in result.assignment.thetas))
        header.append(f"ax2: {result.assignment.ax2.value}")
    header += [f"note: {note}" for note in result.notes]
    _write(emit_circuit(result.circuit, header=tuple(header)), args.out)
    return 0


def _cmd_verify(args) -> int:
    op, n = _require_op(args)
    circuit = parse_circuit(Path(args.circuit).read_text())
    verdict, reason = _check(circuit, op, n)
    print(f"op={op}")
    print(f"n={n}")
    print(f"circuit={args.circuit}")
    print(f"verdict={'PASS' if verdict else 'FAIL'}")
    if reason:
        print(f"reason={reason}")
    return 0 if verdict else 1


def _check(circuit: Circuit, op: str, n: int) -> tuple[bool, str]:
    if n not in OPERATOR_RANGES[op]:
        return False, f"{op} supports n in {list(OPERATOR_RANGES[op])}"
    if circuit.n_qubits != n:
        return False, f"circuit has {circuit.n_qubits} qubits, expected {n}"
    if op in _BOOLEAN_KINDS:
        try:
            table = boolean_action(circuit, n - 1)
        except ValueError as exc:
            return False, str(exc)
        if table != BooleanSpec.named(op, n - 1).truth_table():
            return False, "truth table mismatch"
        return True, ""
    if op in ("cv", "cvdg"):
        target = reference_unitary(op, n)
    elif op == "fredkin":
        target = permutation_unitary(fredkin_permutation(n))
    else:
        target = permutation_unitary(miller_permutation(n))
    if not equiv_up_to_relative_phase(unitary_of(circuit), target):
        return False, "unitary does not match the operator up to relative phase"
    return True, ""


def _cmd_trace(args) -> int:
    if args.circuit:
        circuit = parse_circuit(Path(args.circuit).read_text())
        text = render_trace_table(circuit)
    else:
        result = _synth_from_args(args)
        if result.template is None:
            raise ValueError(f"{result.kind} is a composite circuit with no single trace")
        text = render_trace_table(result.circuit, labels=result.trace_labels())
    _write(text, args.out)
    return 0


def _cmd_cost(args) -> int:
    lines = []
    if args.circuit:
        circuit = parse_circuit(Path(args.circuit).read_text())
        kind = None
        lines.append(f"circuit={args.circuit}")
    else:
        result = _synth_from_args(args)
        circuit, kind = result.circuit, result.kind
        lines += [f"op={kind}", f"n={result.n_qubits}"]
    layout = _resolve_layout(args)
    mapping = _parse_map(args.map) if args.map else None
    basis = load_basis(args.basis) if args.basis else DEFAULT_BASIS
    report = cost_pipeline(circuit, layout, mapping,
                           weights=_parse_weights(args.weights),
                           xc_mode=args.xc_mode, basis=basis)
    if layout is not None:
        lines.append(f"layout={layout.name}")
        lines.append("mapping=" + ",".join(str(p) for p in report.mapping.physical))
    for name, value in zip(("n1", "n2", "xc", "d"), report.counts):
        lines.append(f"{name}={value}")
    lines.append(f"weights={_format_weights(report.weights)}")
    lines.append(f"wtqc={report.wtqc:g}")
    if kind is not None and (kind, circuit.n_qubits) in REFERENCE_COSTS:
        deviations = report_deviations(kind, circuit.n_qubits, report)
        for item in deviations:
            lines.append(f"deviation={item}")
        if not deviations:
            lines.append("deviation=none")
    print("\n".join(lines))
    return 0


def _cmd_compare(args) -> int:
    op, n = _require_op(args)
    layout = _resolve_layout(args)
    basis = load_basis(args.basis) if args.basis else DEFAULT_BASIS
    weights = _parse_weights(args.weights)
    reports = {}
    for label, circuit in (("bsa", synth_detailed(op, n).circuit),
                           ("naive", naive_synth(op, n))):
        reports[label] = cost_pipeline(circuit, layout, None, weights=weights,
                                       xc_mode=args.xc_mode, basis=basis)
    print(f"op={op}")
    print(f"n={n}")
    if layout is not None:
        print(f"layout={layout.name}")
    print(f"weights={_format_weights(weights)}")
    rows = [("metric", "bsa", "naive")]
    for name, bsa_value, naive_value in zip(("n1", "n2", "xc", "d"),
                                            reports["bsa"].counts,
                                            reports["naive"].counts):
        rows.append((name, str(bsa_value), str(naive_value)))
    rows.append(("wtqc", f"{reports['bsa'].wtqc:g}", f"{reports['naive'].wtqc:g}"))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


if __name__ == "__main__":
    sys.exit(main())
