"""Quantum circuits as explicit gate sequences.

A circuit is an ordered list of gates on ``n`` qubits, each gate a unitary
matrix with an explicit target tuple.  Qubit 0 is the leftmost (most
significant) tensor factor.  Utilities cover construction from a JSON-able
description, identity padding, greedy layer decomposition, and a dense
state-vector simulator used as the reference oracle in tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

_SQ2 = 1.0 / math.sqrt(2.0)

GATE_LIBRARY = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "T": np.diag([1.0, np.exp(1j * math.pi / 4)]).astype(complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}

_UNITARY_TOL = 1e-12


@dataclass(frozen=True)
class Gate:
    """A unitary on an ordered tuple of distinct target qubits.

    For multi-qubit gates the matrix is indexed big-endian in target
    order: row/column bit 0 belongs to ``targets[0]``.
    """

    label: str
    targets: tuple[int, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        targets = tuple(int(t) for t in self.targets)
        object.__setattr__(self, "targets", targets)
        if len(set(targets)) != len(targets):
            raise ValueError(f"duplicate targets {targets}")
        if any(t < 0 for t in targets):
            raise ValueError(f"negative target in {targets}")
        m = np.asarray(self.matrix, dtype=complex)
        dim = 2 ** len(targets)
        if m.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {m.shape} does not match {len(targets)} targets"
            )
        if np.linalg.norm(m.conj().T @ m - np.eye(dim)) > _UNITARY_TOL * dim:
            raise ValueError(f"gate {self.label!r} matrix is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def arity(self) -> int:
        return len(self.targets)


def named_gate(name: str, targets) -> Gate:
    """Gate from the built-in library (I, X, H, T, CNOT, SWAP)."""
    if name not in GATE_LIBRARY:
        raise ValueError(f"unknown gate name {name!r}")
    return Gate(name, tuple(targets), GATE_LIBRARY[name])


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence on ``n`` qubits."""

    n: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n < 1:
            raise ValueError("circuit needs at least one qubit")
        for g in self.gates:
            if max(g.targets, default=0) >= self.n:
                raise ValueError(
                    f"gate {g.label!r} targets {g.targets} exceed n={self.n}"
                )

    @property
    def gate_count(self) -> int:
        return len(self.gates)


def build_circuit(spec: dict) -> Circuit:
    """Construct a circuit from a JSON-able description.

    ``spec`` holds ``n`` and a ``gates`` list; each entry names a library
    gate (``{"name": "CNOT", "targets": [0, 1]}``) or supplies an explicit
    matrix (``{"label": ..., "matrix": [[...]], "targets": [...]}``) with
    entries either plain numbers or ``[re, im]`` pairs.
    """
    n = int(spec["n"])
    gates = []
    for entry in spec.get("gates", []):
        targets = tuple(int(t) for t in entry["targets"])
        if "name" in entry:
            gates.append(named_gate(entry["name"], targets))
        elif "matrix" in entry:
            m = _matrix_from_json(entry["matrix"])
            gates.append(Gate(entry.get("label", "U"), targets, m))
        else:
            raise ValueError(f"gate entry needs 'name' or 'matrix': {entry}")
    return Circuit(n, tuple(gates))


def circuit_to_json(circuit: Circuit) -> dict:
    """Inverse of :func:`build_circuit` (library gates stay symbolic)."""
    gates = []
    for g in circuit.gates:
        if g.label in GATE_LIBRARY and np.array_equal(g.matrix, GATE_LIBRARY[g.label]):
            gates.append({"name": g.label, "targets": list(g.targets)})
        else:
            gates.append(
                {
                    "label": g.label,
                    "targets": list(g.targets),
                    "matrix": _matrix_to_json(g.matrix),
                }
            )
    return {"n": circuit.n, "gates": gates}


def _matrix_from_json(rows) -> np.ndarray:
    def scalar(v):
        if isinstance(v, (list, tuple)):
            re, im = v
            return complex(re, im)
        return complex(v)

    return np.array([[scalar(v) for v in row] for row in rows], dtype=complex)


def _matrix_to_json(m: np.ndarray):
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def pad_with_identities(circuit: Circuit, front: int, back: int) -> Circuit:
    """Pad with identity gates on qubit 0 before and after the gate list."""
    if front < 0 or back < 0:
        raise ValueError("padding counts must be non-negative")
    pad = lambda k: tuple(named_gate("I", (0,)) for _ in range(k))
    return Circuit(circuit.n, pad(front) + circuit.gates + pad(back))


@dataclass(frozen=True)
class LayeredCircuit:
    """A circuit grouped into layers of gates on disjoint qubits."""

    n: int
    layers: tuple[tuple[Gate, ...], ...]

    def __post_init__(self):
        layers = tuple(tuple(layer) for layer in self.layers)
        object.__setattr__(self, "layers", layers)
        for layer in layers:
            used = [t for g in layer for t in g.targets]
            if len(set(used)) != len(used):
                raise ValueError("layer gates overlap on a qubit")

    @property
    def depth(self) -> int:
        return len(self.layers)

    def flatten(self) -> Circuit:
        return Circuit(self.n, tuple(g for layer in self.layers for g in layer))


def decompose_into_layers(circuit: Circuit) -> LayeredCircuit:
    """Greedy as-soon-as-possible layering preserving gate order per qubit."""
    layers: list[list[Gate]] = []
    frontier = [0] * circuit.n  # first layer index available per qubit
    for g in circuit.gates:
        at = max(frontier[t] for t in g.targets)
        while len(layers) <= at:
            layers.append([])
        layers[at].append(g)
        for t in g.targets:
            frontier[t] = at + 1
    return LayeredCircuit(circuit.n, tuple(tuple(l) for l in layers))


def apply_gate_to_state(state: np.ndarray, matrix: np.ndarray, targets, n: int) -> np.ndarray:
    """Apply a local unitary to a length-2^n state vector."""
    targets = list(targets)
    k = len(targets)
    psi = np.asarray(state, dtype=complex).reshape((2,) * n)
    op = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * k))
    psi = np.tensordot(op, psi, axes=(list(range(k, 2 * k)), targets))
    psi = np.moveaxis(psi, list(range(k)), targets)
    return psi.reshape(-1)


def apply_circuit_oracle(circuit: Circuit, state: np.ndarray) -> np.ndarray:
    """Dense reference simulation: apply all gates in order to ``state``."""
    psi = np.asarray(state, dtype=complex)
    if psi.shape != (2**circuit.n,):
        raise ValueError(f"state dimension {psi.shape} != 2^{circuit.n}")
    for g in circuit.gates:
        psi = apply_gate_to_state(psi, g.matrix, g.targets, circuit.n)
    return psi


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_circuit(
    n: int, gate_count: int, rng: np.random.Generator, two_qubit_prob: float = 0.5
) -> Circuit:
    """Random test circuit mixing 1-qubit and adjacent 2-qubit unitaries."""
    gates = []
    for _ in range(gate_count):
        if n >= 2 and rng.random() < two_qubit_prob:
            a = int(rng.integers(0, n - 1))
            gates.append(Gate("U4", (a, a + 1), random_unitary(4, rng)))
        else:
            a = int(rng.integers(0, n))
            gates.append(Gate("U2", (a,), random_unitary(2, rng)))
    return Circuit(n, tuple(gates))
