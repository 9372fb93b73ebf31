"""Compilation of layered circuits onto a 2-D nearest-neighbour grid.

A depth-``D`` circuit on ``n`` qubits whose gates act on adjacent qubit
rows is laid out on an ``n``-row, ``D``-column grid of physical qubits,
with the input state in column 0.  Stage ``j`` (1-based) applies the
gates of layer ``j`` to column ``j-1`` while sweeping the rows
top-to-bottom for odd ``j`` and bottom-to-top for even ``j``.  Every row
gets exactly one step per stage:

* the sweep-first row of a gate fires the gate, composed with the swap
  of that row into column ``j`` (a 3-site operation);
* every other row is swapped into column ``j`` by a bare SWAP;
* in the final stage nothing moves: gates fire in place and untouched
  rows idle, so the output sits in column ``D-1`` and all other sites
  return to |0>.

Each step advances a clock by one tick, and tick ``k`` is assigned a
planar coordinate in the channel between the columns that stage
straddles.  The construction yields exactly ``n*D`` steps (a clock path
of ``n*D + 1`` points) and every step's interaction region -- its sites
plus the two adjacent clock ticks -- has Chebyshev diameter at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuits import (
    GATE_LIBRARY,
    Circuit,
    Gate,
    LayeredCircuit,
    apply_circuit_oracle,
)


@dataclass(frozen=True)
class GridStep:
    """One clock tick: a (possibly swap-composed) gate, a swap, or an idle.

    ``sites`` are ``(row, col)`` pairs in operator slot order.
    ``clock_xy`` is the planar coordinate of the clock tick fired by this
    step.
    """

    kind: str  # "gate" | "swap" | "wait"
    label: str
    sites: tuple[tuple[int, int], ...]
    matrix: np.ndarray = field(repr=False)
    clock_xy: tuple[float, float] = (0.0, 0.0)


@dataclass(frozen=True)
class GridCircuit:
    """A compiled circuit on an ``n_rows`` x ``n_cols`` qubit grid."""

    n_rows: int
    n_cols: int
    steps: tuple[GridStep, ...]
    clock_start_xy: tuple[float, float]

    @property
    def step_count(self) -> int:
        return len(self.steps)

    @property
    def clock_path(self) -> tuple[tuple[float, float], ...]:
        """Planar clock coordinates, one per tick, starting at tick 0."""
        return (self.clock_start_xy,) + tuple(s.clock_xy for s in self.steps)

    def site_index(self, row: int, col: int) -> int:
        """Flat qubit index of a grid site (row-major)."""
        if not (0 <= row < self.n_rows and 0 <= col < self.n_cols):
            raise ValueError(f"site ({row}, {col}) off the grid")
        return row * self.n_cols + col

    def site_coordinates(self) -> dict[int, tuple[float, float]]:
        """Planar ``(x, y)`` coordinate of each flat qubit index."""
        return {
            self.site_index(r, c): (float(c), float(r))
            for r in range(self.n_rows)
            for c in range(self.n_cols)
        }

    def to_circuit(self) -> Circuit:
        """The step sequence as a flat circuit on the ``n_rows * n_cols`` grid."""
        gates = tuple(
            Gate(s.label, tuple(self.site_index(r, c) for r, c in s.sites), s.matrix)
            for s in self.steps
        )
        return Circuit(self.n_rows * self.n_cols, gates)

    def to_json(self) -> dict:
        return {
            "n_rows": self.n_rows,
            "n_cols": self.n_cols,
            "clock_start_xy": list(self.clock_start_xy),
            "steps": [
                {
                    "kind": s.kind,
                    "label": s.label,
                    "sites": [list(p) for p in s.sites],
                    "clock_xy": list(s.clock_xy),
                }
                for s in self.steps
            ],
        }


def _swap_slot_with_last(matrix: np.ndarray, slot: int, k: int) -> np.ndarray:
    """Append an ancilla slot to a k-slot unitary and swap ``slot`` into it."""
    m = np.kron(matrix, np.eye(2))
    t = m.reshape((2,) * (2 * (k + 1)))
    t = np.swapaxes(t, slot, k)  # permute output axes only: swap after the gate
    return t.reshape(2 ** (k + 1), 2 ** (k + 1))


def compile_to_grid(layered: LayeredCircuit) -> GridCircuit:
    """Lay a nearest-neighbour layered circuit onto an ``n x D`` grid.

    Every gate must target a single row or two adjacent rows; insert
    explicit SWAP gates beforehand if the source circuit has long-range
    gates.  Raises on non-adjacent targets.
    """
    n = layered.n
    layers = layered.layers if layered.layers else ((),)
    depth = len(layers)

    swap = GATE_LIBRARY["SWAP"]
    identity = GATE_LIBRARY["I"]
    steps: list[GridStep] = []

    for j, layer in enumerate(layers, start=1):
        col = j - 1
        last_stage = j == depth
        covered: dict[int, Gate] = {}
        for g in layer:
            rows = sorted(g.targets)
            if len(rows) > 2 or (len(rows) == 2 and rows[1] - rows[0] != 1):
                raise ValueError(
                    f"gate {g.label!r} on {g.targets} is not nearest-neighbour"
                )
            for r in rows:
                covered[r] = g

        channel_x = col + 0.5
        sweep = range(n) if j % 2 == 1 else range(n - 1, -1, -1)
        fired: set[int] = set()
        for row in sweep:
            xy = (channel_x, float(row))
            g = covered.get(row)
            if g is not None and id(g) not in fired:
                # sweep-first row of this gate: fire it here
                fired.add(id(g))
                if last_stage:
                    sites = tuple((r, col) for r in g.targets)
                    steps.append(GridStep("gate", g.label, sites, g.matrix, xy))
                else:
                    slot = g.targets.index(row)
                    m = _swap_slot_with_last(g.matrix, slot, g.arity)
                    sites = tuple((r, col) for r in g.targets) + ((row, col + 1),)
                    steps.append(
                        GridStep("gate", f"{g.label}+SWAP", sites, m, xy)
                    )
            elif g is not None and not last_stage:
                # second row of an already-fired gate: route it right
                steps.append(
                    GridStep("swap", "SWAP", ((row, col), (row, col + 1)), swap, xy)
                )
            elif not last_stage:
                steps.append(
                    GridStep("swap", "SWAP", ((row, col), (row, col + 1)), swap, xy)
                )
            else:
                steps.append(GridStep("wait", "I", ((row, col),), identity, xy))

    start_y = steps[0].clock_xy[1] if steps else 0.0
    return GridCircuit(n, depth, tuple(steps), (-0.5, start_y))


def simulate_grid(grid: GridCircuit, input_state: np.ndarray) -> np.ndarray:
    """Dense simulation of the compiled steps.

    ``input_state`` lives on the ``n_rows`` logical qubits; it is placed
    in column 0 with every other site in |0>, and the final state of
    column ``n_cols - 1`` is returned.  Raises if the remaining sites do
    not end deterministically in |0>.
    """
    n, cols = grid.n_rows, grid.n_cols
    total = n * cols
    if total > 16:
        raise ValueError("dense grid simulation limited to 16 qubits")
    psi_in = np.asarray(input_state, dtype=complex)
    if psi_in.shape != (2**n,):
        raise ValueError(f"input dimension {psi_in.shape} != 2^{n}")

    def embed_index(idx: int, col: int) -> int:
        pos = 0
        for r in range(n):
            if (idx >> (n - 1 - r)) & 1:
                pos |= 1 << (total - 1 - grid.site_index(r, col))
        return pos

    full = np.zeros(2**total, dtype=complex)
    for idx in range(2**n):
        full[embed_index(idx, 0)] = psi_in[idx]

    full = apply_circuit_oracle(grid.to_circuit(), full)

    out = np.array([full[embed_index(idx, cols - 1)] for idx in range(2**n)])
    leak = np.linalg.norm(full) ** 2 - np.linalg.norm(out) ** 2
    if leak > 1e-10:
        raise ValueError(f"non-output sites not in |0>: weight {leak:.3e} leaked")
    return out


def clock_path_diameters(grid: GridCircuit) -> list[float]:
    """Chebyshev diameter of each step's interaction region.

    The region of step ``k`` (0-based) holds the sites the step acts on
    plus the planar positions of clock ticks ``k`` and ``k+1``.
    """
    path = grid.clock_path
    out = []
    for k, s in enumerate(grid.steps):
        pts = [path[k], path[k + 1]] + [(float(c), float(r)) for r, c in s.sites]
        d = max(
            max(abs(a[0] - b[0]), abs(a[1] - b[1])) for a in pts for b in pts
        )
        out.append(d)
    return out


def appendix_example_circuit() -> Circuit:
    """Reference 6-qubit, depth-3 nearest-neighbour example used in demos."""
    from .circuits import named_gate

    g = [
        ("CNOT", (0, 1)),
        ("CNOT", (2, 3)),
        ("CNOT", (4, 5)),
        ("CNOT", (1, 2)),
        ("CNOT", (3, 4)),
        ("CNOT", (2, 3)),
        ("CNOT", (4, 5)),
    ]
    return Circuit(6, tuple(named_gate(name, t) for name, t in g))


def random_grid_instance(rng: np.random.Generator) -> LayeredCircuit:
    """Random small nearest-neighbour layered circuit for compiler tests."""
    from .circuits import random_unitary

    n = int(rng.integers(1, 4))
    depth = int(rng.integers(1, 4))
    layers = []
    for _ in range(depth):
        if n == 1 or rng.random() < 0.25:
            a = int(rng.integers(0, n))
            layers.append((Gate("U2", (a,), random_unitary(2, rng)),))
        else:
            a = int(rng.integers(0, n - 1))
            layers.append((Gate("U4", (a, a + 1), random_unitary(4, rng)),))
    return LayeredCircuit(n, tuple(layers))
