"""Clock Hamiltonians built from circuits, as sums of local terms.

Two families are supported, both acting on ``n`` computational qubits
tensored with a ``b``-qubit clock register:

* ``fk`` -- the standard positive-semidefinite clock Hamiltonian.  For a
  circuit of ``G`` gates the clock takes values 0..G and each gate
  contributes a hopping term ``-(U_x (x)(x-1) + h.c.)`` plus the two
  diagonal projectors onto clock values ``x`` and ``x-1``.  Restricted to
  the span of valid history states it is the tridiagonal lattice
  Laplacian with diagonal ``(1, 2, ..., 2, 1)`` and off-diagonal ``-1``,
  independently of the gates.

* ``lin`` -- a linear-dispersion clock with no diagonal part.  The clock
  takes G+2 values c = 0..G+1 (c = 0 is decoupled); odd bonds carry
  coupling +1 and even bonds -1, so the restriction to the history chain
  is the tridiagonal matrix with zero diagonal and alternating
  off-diagonal signs, a discretized one-dimensional Dirac operator whose
  wavepackets travel dispersion-free.

Clock transitions are realized on the union of the 1-positions of the
two codewords involved.  Within that support each codeword is the unique
valid string matching the local pattern, so the realization is exact on
the span of valid codewords for both the one-hot and the compressed
fixed-weight encodings, and every term stays ``(arity + 2r)``-local.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuits import Circuit, apply_gate_to_state
from .clockenc import (
    ClockEncoding,
    encode_clock_index,
    one_positions,
    transition_union_support,
)

_DENSE_QUBIT_LIMIT = 14  # densification guard: 2^14 x 2^14 matrices at most


@dataclass(frozen=True)
class LocalTerm:
    """A Hermitian operator on an ordered tuple of qubit indices."""

    support: tuple[int, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        support = tuple(int(q) for q in self.support)
        object.__setattr__(self, "support", support)
        if len(set(support)) != len(support):
            raise ValueError(f"duplicate qubits in support {support}")
        m = np.asarray(self.matrix, dtype=complex)
        dim = 2 ** len(support)
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} mismatches support {support}")
        if np.linalg.norm(m - m.conj().T) > 1e-12 * dim:
            raise ValueError("term matrix is not Hermitian")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def weight(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class _HopAction:
    """Clock-level semantics of a hopping term: c_in -> c_out under a gate."""

    c_in: int
    c_out: int
    targets: tuple[int, ...]
    matrix: np.ndarray
    sign: float


@dataclass(frozen=True)
class TermHamiltonian:
    """A clock Hamiltonian as an explicit list of local terms."""

    family: str  # "fk" | "lin"
    circuit: Circuit
    encoding: ClockEncoding
    terms: tuple[LocalTerm, ...]
    hops: tuple[_HopAction, ...] = field(repr=False)
    diag_counts: np.ndarray = field(repr=False)  # multiplicity of (c)(c) per clock value

    @property
    def n_comp(self) -> int:
        return self.circuit.n

    @property
    def n_total(self) -> int:
        return self.circuit.n + self.encoding.b

    @property
    def capacity(self) -> int:
        return self.encoding.capacity


def _hop_term(
    circuit_n: int, enc: ClockEncoding, c_in: int, gate, sign: float
) -> LocalTerm:
    """Local term sign * (U (c_in+1)(c_in) + h.c.) on union support."""
    union = transition_union_support(enc, c_in)
    in_bits = encode_clock_index(enc, c_in)[list(union)]
    out_bits = encode_clock_index(enc, c_in + 1)[list(union)]
    k = len(union)
    idx_in = int("".join(map(str, in_bits)), 2)
    idx_out = int("".join(map(str, out_bits)), 2)
    hop = np.zeros((2**k, 2**k), dtype=complex)
    hop[idx_out, idx_in] = 1.0
    m = sign * (np.kron(gate.matrix, hop) + np.kron(gate.matrix.conj().T, hop.T))
    support = tuple(gate.targets) + tuple(circuit_n + p for p in union)
    return LocalTerm(support, m)


def _diag_term(circuit_n: int, enc: ClockEncoding, c: int) -> LocalTerm:
    """Projector onto clock value c: |1...1><1...1| on its 1-positions."""
    ones = one_positions(enc, c)
    k = len(ones)
    m = np.zeros((2**k, 2**k), dtype=complex)
    m[-1, -1] = 1.0
    return LocalTerm(tuple(circuit_n + p for p in ones), m)


def build_fk_hamiltonian(circuit: Circuit, encoding: ClockEncoding) -> TermHamiltonian:
    """Positive-semidefinite clock Hamiltonian for ``circuit``."""
    g = circuit.gate_count
    if g < 1:
        raise ValueError("circuit must contain at least one gate")
    if encoding.capacity != g + 1:
        raise ValueError(
            f"encoding capacity {encoding.capacity} != gate count + 1 = {g + 1}"
        )
    terms: list[LocalTerm] = []
    hops: list[_HopAction] = []
    diag_counts = np.zeros(g + 1)
    for x in range(1, g + 1):
        gate = circuit.gates[x - 1]
        terms.append(_hop_term(circuit.n, encoding, x - 1, gate, -1.0))
        hops.append(_HopAction(x - 1, x, gate.targets, gate.matrix, -1.0))
        terms.append(_diag_term(circuit.n, encoding, x))
        terms.append(_diag_term(circuit.n, encoding, x - 1))
        diag_counts[x] += 1.0
        diag_counts[x - 1] += 1.0
    return TermHamiltonian(
        "fk", circuit, encoding, tuple(terms), tuple(hops), diag_counts
    )


def build_lin_hamiltonian(circuit: Circuit, encoding: ClockEncoding) -> TermHamiltonian:
    """Linear-dispersion clock Hamiltonian for ``circuit`` (even gate count)."""
    g = circuit.gate_count
    if g < 2 or g % 2 != 0:
        raise ValueError(f"gate count must be even and positive, got {g}")
    if encoding.capacity != g + 2:
        raise ValueError(
            f"encoding capacity {encoding.capacity} != gate count + 2 = {g + 2}"
        )
    terms: list[LocalTerm] = []
    hops: list[_HopAction] = []
    for x in range(1, g // 2 + 1):
        for c_in, sign in ((2 * x - 1, 1.0), (2 * x, -1.0)):
            gate = circuit.gates[c_in - 1]
            terms.append(_hop_term(circuit.n, encoding, c_in, gate, sign))
            hops.append(_HopAction(c_in, c_in + 1, gate.targets, gate.matrix, sign))
    return TermHamiltonian(
        "lin", circuit, encoding, tuple(terms), tuple(hops), np.zeros(g + 2)
    )


def embed_dense(matrix: np.ndarray, support, n_total: int) -> np.ndarray:
    """Expand a local operator on ``support`` to the full 2^n_total space."""
    support = list(support)
    k = len(support)
    rest = [q for q in range(n_total) if q not in support]
    m_rest = len(rest)
    weight = lambda q: 1 << (n_total - 1 - q)
    sup_w = [weight(q) for q in support]
    sup_idx = np.array(
        [sum(w for j, w in enumerate(sup_w) if (a >> (k - 1 - j)) & 1) for a in range(2**k)],
        dtype=np.int64,
    )
    conf = np.arange(2**m_rest, dtype=np.int64)
    rest_idx = np.zeros(2**m_rest, dtype=np.int64)
    for j, q in enumerate(rest):
        rest_idx += ((conf >> (m_rest - 1 - j)) & 1) * weight(q)
    full = np.zeros((1 << n_total, 1 << n_total), dtype=complex)
    for a in range(2**k):
        for bcol in range(2**k):
            v = matrix[a, bcol]
            if v != 0:
                full[sup_idx[a] + rest_idx, sup_idx[bcol] + rest_idx] += v
    return full


def dense_matrix(h: TermHamiltonian) -> np.ndarray:
    """The full 2^(n+b) matrix; guarded to at most 2^14 dimensions."""
    if h.n_total > _DENSE_QUBIT_LIMIT:
        raise ValueError(
            f"refusing to densify {h.n_total} qubits (> {_DENSE_QUBIT_LIMIT})"
        )
    out = np.zeros((1 << h.n_total, 1 << h.n_total), dtype=complex)
    for t in h.terms:
        out += embed_dense(t.matrix, t.support, h.n_total)
    return out


def apply_clock_indexed(h: TermHamiltonian, state: np.ndarray) -> np.ndarray:
    """Apply ``h`` to a state given in clock-indexed form.

    ``state[c]`` is the length-2^n computational component paired with the
    codeword of clock value ``c``.  On the span of valid codewords this
    reproduces the exact action of the term list without ever forming the
    2^(n+b)-dimensional vector, which is what makes very long circuits
    tractable.
    """
    psi = np.asarray(state, dtype=complex)
    if psi.shape != (h.capacity, 2**h.n_comp):
        raise ValueError(
            f"expected clock-indexed shape {(h.capacity, 2 ** h.n_comp)}, got {psi.shape}"
        )
    out = psi * h.diag_counts[:, None]
    n = h.n_comp
    for hop in h.hops:
        out[hop.c_out] += hop.sign * apply_gate_to_state(
            psi[hop.c_in], hop.matrix, hop.targets, n
        )
        out[hop.c_in] += hop.sign * apply_gate_to_state(
            psi[hop.c_out], hop.matrix.conj().T, hop.targets, n
        )
    return out


@dataclass(frozen=True)
class SubspaceOperator:
    """The restriction of a clock Hamiltonian to its history subspace.

    A real symmetric tridiagonal matrix: ``diag`` of length ``dim`` and
    ``off`` of length ``dim - 1``.  Gate-independent for both families.
    """

    family: str
    g: int
    diag: np.ndarray
    off: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.diag)

    def matvec(self, psi: np.ndarray) -> np.ndarray:
        out = self.diag * psi
        out[:-1] += self.off * psi[1:]
        out[1:] += self.off * psi[:-1]
        return out

    def dense(self) -> np.ndarray:
        return (
            np.diag(self.diag.astype(complex))
            + np.diag(self.off, 1)
            + np.diag(self.off, -1)
        )


def subspace_operator(family: str, g: int) -> SubspaceOperator:
    """History-subspace restriction for a ``g``-gate circuit (any gates)."""
    if family == "fk":
        if g < 1:
            raise ValueError("need at least one gate")
        diag = np.full(g + 1, 2.0)
        diag[0] = diag[-1] = 1.0
        off = np.full(g, -1.0)
        return SubspaceOperator("fk", g, diag, off)
    if family == "lin":
        if g < 2 or g % 2 != 0:
            raise ValueError(f"gate count must be even and positive, got {g}")
        diag = np.zeros(g + 2)
        off = np.array(
            [0.0] + [1.0 if c % 2 == 1 else -1.0 for c in range(1, g + 1)]
        )
        return SubspaceOperator("lin", g, diag, off)
    raise ValueError(f"unknown family {family!r}")


def restrict_to_subspace(h: TermHamiltonian) -> SubspaceOperator:
    return subspace_operator(h.family, h.circuit.gate_count if h.family == "fk" else h.capacity - 2)


def _history_comp_states(circuit: Circuit, count: int) -> list[np.ndarray]:
    """Computational states h_0 .. h_{count-1} (gate prefixes on |0...0>)."""
    psi = np.zeros(2**circuit.n, dtype=complex)
    psi[0] = 1.0
    out = [psi]
    for gate in circuit.gates[: count - 1]:
        psi = apply_gate_to_state(psi, gate.matrix, gate.targets, circuit.n)
        out.append(psi)
    return out


def history_weights_to_clock_indexed(
    circuit: Circuit, weights, family: str
) -> np.ndarray:
    """Clock-indexed form of the history state with the given chain weights.

    For the ``fk`` family, chain position x pairs h_x with clock value x.
    For ``lin``, clock value c >= 1 pairs with h_{c-1}; the decoupled
    c = 0 site pairs with h_0.
    """
    w = np.asarray(weights, dtype=complex)
    if family == "fk":
        if len(w) != circuit.gate_count + 1:
            raise ValueError("weights must have length gate_count + 1")
        comp = _history_comp_states(circuit, len(w))
        return np.array([w[c] * comp[c] for c in range(len(w))])
    if family == "lin":
        if len(w) != circuit.gate_count + 2:
            raise ValueError("weights must have length gate_count + 2")
        comp = _history_comp_states(circuit, len(w) - 1)
        rows = [w[0] * comp[0]]
        rows += [w[c] * comp[c - 1] for c in range(1, len(w))]
        return np.array(rows)
    raise ValueError(f"unknown family {family!r}")


def history_state(
    circuit: Circuit, weights, encoding: ClockEncoding, family: str = "fk"
) -> np.ndarray:
    """Full 2^(n+b) history state Sum_c w_c |h'_c> |enc(c)>.

    Guarded to n + b <= 24 qubits; use the clock-indexed form beyond that.
    """
    n, b = circuit.n, encoding.b
    if n + b > 24:
        raise ValueError(f"history state on {n + b} qubits exceeds the 2^24 guard")
    indexed = history_weights_to_clock_indexed(circuit, weights, family)
    if len(indexed) != encoding.capacity:
        raise ValueError("weights length mismatches encoding capacity")
    full = np.zeros((2**n, 2**b), dtype=complex)
    for c in range(encoding.capacity):
        bits = encode_clock_index(encoding, c)
        col = int("".join(map(str, bits)), 2)
        full[:, col] += indexed[c]
    return full.reshape(-1)


@dataclass(frozen=True)
class AuditReport:
    """Locality audit of a term Hamiltonian."""

    family: str
    encoding_kind: str
    term_count: int
    max_weight: int
    weight_bound: int
    weight_ok: bool
    max_diameter: float | None = None
    diameter_bound: float = 2.0
    geometry_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "encoding": self.encoding_kind,
            "term_count": self.term_count,
            "max_weight": self.max_weight,
            "weight_bound": self.weight_bound,
            "weight_ok": self.weight_ok,
            "max_diameter": self.max_diameter,
            "diameter_bound": self.diameter_bound,
            "geometry_ok": self.geometry_ok,
        }


def locality_audit(
    h: TermHamiltonian, coordinates: dict[int, tuple[float, float]] | None = None
) -> AuditReport:
    """Check every term against the encoding's locality guarantee.

    The guarantee is ``max gate arity + 2r`` qubits per term (4 for
    one-hot clocks with 2-qubit gates, 2r + 2 for compressed clocks).
    With planar ``coordinates`` for all qubits, also checks that every
    term fits in Chebyshev diameter 2.
    """
    max_arity = max((g.arity for g in h.circuit.gates), default=1)
    bound = max_arity + 2 * h.encoding.r
    max_weight = max(t.weight for t in h.terms)
    max_diameter = None
    geometry_ok = None
    if coordinates is not None:
        max_diameter = 0.0
        for t in h.terms:
            pts = [coordinates[q] for q in t.support]
            for a in pts:
                for b in pts:
                    d = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
                    max_diameter = max(max_diameter, d)
        geometry_ok = max_diameter <= 2.0 + 1e-12
    return AuditReport(
        family=h.family,
        encoding_kind=h.encoding.kind,
        term_count=len(h.terms),
        max_weight=max_weight,
        weight_bound=bound,
        weight_ok=max_weight <= bound,
        max_diameter=max_diameter,
        geometry_ok=geometry_ok,
    )


def grid_qubit_coordinates(grid) -> dict[int, tuple[float, float]]:
    """Planar coordinates for a grid circuit's qubits plus a one-hot clock.

    Computational qubit (row, col) sits at (col, row); clock bit k (the
    one-hot bit for tick k) sits at the k-th point of the clock path.
    """
    coords = grid.site_coordinates()
    n = grid.n_rows * grid.n_cols
    for k, xy in enumerate(grid.clock_path):
        coords[n + k] = xy
    return coords
