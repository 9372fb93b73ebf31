"""Command-line interface.

Subcommands:

* ``build``     -- construct a clock Hamiltonian and dump its term list.
* ``evolve``    -- run one configured wavepacket experiment.
* ``sweep``     -- preset runs over a range of G with scaling slopes.
* ``compile2d`` -- lay a circuit onto the 2-D nearest-neighbour grid.
* ``clock``     -- print a clock-encoding codeword table.
* ``audit``     -- locality audit of a constructed Hamiltonian.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .circuits import build_circuit, decompose_into_layers
from .clockenc import (
    bits_to_str,
    combinadic_encoding,
    encode_clock_index,
    pulse_encoding,
    transition_support,
)
from .gridcompile import (
    appendix_example_circuit,
    clock_path_diameters,
    compile_to_grid,
)
from .hamiltonian import (
    build_fk_hamiltonian,
    build_lin_hamiltonian,
    grid_qubit_coordinates,
    locality_audit,
)
from . import experiments


def _load_circuit(args):
    if getattr(args, "example", False):
        return appendix_example_circuit()
    with open(args.circuit) as fh:
        return build_circuit(json.load(fh))


def _encoding(kind: str, capacity: int, r: int):
    if kind == "pulse":
        return pulse_encoding(capacity)
    return combinadic_encoding(capacity, r)


def _build_hamiltonian(circuit, family: str, kind: str, r: int):
    if family == "fk":
        enc = _encoding(kind, circuit.gate_count + 1, r)
        return build_fk_hamiltonian(circuit, enc)
    enc = _encoding(kind, circuit.gate_count + 2, r)
    return build_lin_hamiltonian(circuit, enc)


def cmd_build(args) -> int:
    circuit = _load_circuit(args)
    ham = _build_hamiltonian(circuit, args.family, args.encoding, args.r)
    payload = {
        "tool_version": __version__,
        "family": ham.family,
        "encoding": {
            "kind": ham.encoding.kind,
            "capacity": ham.encoding.capacity,
            "b": ham.encoding.b,
            "r": ham.encoding.r,
        },
        "n_comp": ham.n_comp,
        "n_total": ham.n_total,
        "terms": [
            {
                "support": list(t.support),
                "matrix": [
                    [[float(v.real), float(v.imag)] for v in row] for row in t.matrix
                ],
            }
            for t in ham.terms
        ],
    }
    _emit(payload, args.out)
    return 0


def cmd_evolve(args) -> int:
    cfg = experiments.load_config(args.config)
    result = experiments.run_experiment(cfg, out_dir=args.out)
    row = result["metrics"]
    print(f"config {result['config_hash']}  gates {result['gate_count']}")
    for key in experiments.SWEEP_FIELDS:
        print(f"  {key:>10} = {row[key]}")
    return 0


def cmd_sweep(args) -> int:
    gs = [int(v) for v in args.G.split(",")]
    summary = experiments.sweep_scaling(args.family, gs, args.out, args.samples)
    for row in summary["rows"]:
        print(
            f"G={row['G']:<6} E_std={row['E_std']:.6g} "
            f"ratio_dE={row['ratio_dE']:.6g} p_success={row['p_success']:.6g}"
        )
    for name, slope in summary["slopes"].items():
        print(f"{name} = {slope:.4f}" if slope is not None else f"{name} = n/a")
    return 0


def cmd_compile2d(args) -> int:
    circuit = _load_circuit(args)
    grid = compile_to_grid(decompose_into_layers(circuit))
    payload = grid.to_json()
    payload["tool_version"] = __version__
    payload["step_count"] = grid.step_count
    payload["clock_path_points"] = len(grid.clock_path)
    payload["max_step_diameter"] = max(clock_path_diameters(grid), default=0.0)
    _emit(payload, args.out)
    print(
        f"{grid.n_rows}x{grid.n_cols} grid, {grid.step_count} steps, "
        f"clock path {len(grid.clock_path)} points"
    )
    return 0


def cmd_clock(args) -> int:
    enc = _encoding(args.encoding, args.capacity, args.r)
    print(f"{enc.kind} encoding: capacity {enc.capacity}, b={enc.b}, r={enc.r}")
    for x in range(enc.capacity):
        line = f"{x:>6}  {bits_to_str(encode_clock_index(enc, x))}"
        if x < enc.capacity - 1:
            line += f"  flips {list(transition_support(enc, x))}"
        print(line)
    return 0


def cmd_audit(args) -> int:
    circuit = _load_circuit(args)
    coords = None
    if args.grid:
        grid = compile_to_grid(decompose_into_layers(circuit))
        circuit = grid.to_circuit()
        coords = grid_qubit_coordinates(grid)
        if args.encoding != "pulse":
            raise SystemExit("geometric audit is defined for the pulse encoding")
    ham = _build_hamiltonian(circuit, args.family, args.encoding, args.r)
    report = locality_audit(ham, coords)
    _emit(report.to_json(), args.out)
    status = "ok" if report.weight_ok and report.geometry_ok is not False else "VIOLATION"
    print(
        f"{report.term_count} terms, max weight {report.max_weight} "
        f"(bound {report.weight_bound}), geometry "
        f"{report.max_diameter if report.max_diameter is not None else 'n/a'}: {status}"
    )
    return 0


def _emit(payload: dict, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=2)
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _add_circuit_args(p) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--circuit", help="path to a circuit JSON file")
    src.add_argument(
        "--example", action="store_true", help="use the built-in 6-qubit example"
    )


def _add_ham_args(p) -> None:
    p.add_argument("--family", choices=["fk", "lin"], default="fk")
    p.add_argument("--encoding", choices=["pulse", "combinadic"], default="pulse")
    p.add_argument("--r", type=int, default=2, help="combinadic Hamming weight")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="clocksim",
        description="Clock-register Hamiltonians: construction, dynamics, metrics.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a Hamiltonian term list")
    _add_circuit_args(p)
    _add_ham_args(p)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("evolve", help="run one configured experiment")
    p.add_argument("--config", required=True, help="experiment config JSON")
    p.add_argument("--out", help="directory for summary.json and series.csv")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sweep", help="scaling sweep over G")
    p.add_argument("--family", choices=["fk", "lin"], required=True)
    p.add_argument("--G", required=True, help="comma-separated G values")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--samples", type=int, default=201)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compile2d", help="compile onto the 2-D grid")
    _add_circuit_args(p)
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_compile2d)

    p = sub.add_parser("clock", help="print a clock-encoding table")
    p.add_argument("--encoding", choices=["pulse", "combinadic"], default="pulse")
    p.add_argument("--capacity", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_clock)

    p = sub.add_parser("audit", help="locality audit of a Hamiltonian")
    _add_circuit_args(p)
    _add_ham_args(p)
    p.add_argument(
        "--grid",
        action="store_true",
        help="compile to the 2-D grid first and audit geometric locality",
    )
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_audit)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
