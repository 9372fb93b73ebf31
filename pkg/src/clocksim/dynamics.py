"""Time evolution engines.

Subspace evolution diagonalizes the (real symmetric tridiagonal)
restriction of a clock Hamiltonian once and evaluates exp(-iHt) exactly
at every sample time; this is the workhorse for chains with tens of
thousands of sites.  Full-space evolution densifies the term Hamiltonian
and is only for small cross-validation instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .hamiltonian import SubspaceOperator, TermHamiltonian, dense_matrix

_FULLSPACE_QUBIT_LIMIT = 14


@dataclass(frozen=True)
class Trajectory:
    """States sampled along exp(-iHt)|psi0>; row k is the state at times[k]."""

    times: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        if self.states.shape[0] != len(self.times):
            raise ValueError("one state row per sample time required")

    @property
    def samples(self) -> int:
        return len(self.times)

    @property
    def duration(self) -> float:
        return float(self.times[-1])


def _sample_times(t_final: float, samples: int) -> np.ndarray:
    if t_final < 0:
        raise ValueError("t_final must be non-negative")
    if samples < 2:
        raise ValueError("need at least two sample times")
    return np.linspace(0.0, t_final, samples)


def evolve_subspace(
    op: SubspaceOperator, psi0: np.ndarray, t_final: float, samples: int = 201
) -> Trajectory:
    """Exact spectral evolution on the history chain."""
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (op.dim,):
        raise ValueError(f"state dimension {psi0.shape} != chain dimension {op.dim}")
    times = _sample_times(t_final, samples)
    evals, evecs = scipy.linalg.eigh_tridiagonal(op.diag, op.off)
    coeff = evecs.T @ psi0
    phases = np.exp(-1j * np.outer(times, evals))
    states = (phases * coeff) @ evecs.T
    return Trajectory(times=times, states=states)


def evolve_fullspace(
    h: TermHamiltonian, psi0: np.ndarray, t_final: float, samples: int = 201
) -> Trajectory:
    """Dense evolution under the full term Hamiltonian (small instances)."""
    if h.n_total > _FULLSPACE_QUBIT_LIMIT:
        raise ValueError(
            f"full-space evolution refuses {h.n_total} qubits "
            f"(> {_FULLSPACE_QUBIT_LIMIT})"
        )
    psi0 = np.asarray(psi0, dtype=complex)
    dim = 1 << h.n_total
    if psi0.shape != (dim,):
        raise ValueError(f"state dimension {psi0.shape} != {dim}")
    times = _sample_times(t_final, samples)
    evals, evecs = np.linalg.eigh(dense_matrix(h))
    coeff = evecs.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, evals))
    states = (phases * coeff) @ evecs.T
    return Trajectory(times=times, states=states)


def overlap_series(traj: Trajectory, ref: np.ndarray) -> np.ndarray:
    """|<ref|psi(t)>| at each sample time."""
    ref = np.asarray(ref, dtype=complex)
    return np.abs(traj.states @ ref.conj())
