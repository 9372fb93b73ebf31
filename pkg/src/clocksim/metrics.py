"""Energy, path-length, orthogonality and speed-limit diagnostics.

These quantify how fast a clock wavepacket traverses its history chain
relative to the energy it costs, and compare the measured traversal
against the two standard quantum speed limits (the variance bound
pi / (2 dE) and the mean-energy bound pi / <E> above the ground state).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import Trajectory
from .hamiltonian import SubspaceOperator


@dataclass(frozen=True)
class EnergyStats:
    mean: float
    stddev: float


def energy_stats(op: SubspaceOperator, psi: np.ndarray) -> EnergyStats:
    """<E> and dE of a normalized chain state (conserved under evolution)."""
    psi = np.asarray(psi, dtype=complex)
    hpsi = op.matvec(psi)
    mean = float(np.real(np.vdot(psi, hpsi)))
    second = float(np.real(np.vdot(hpsi, hpsi)))
    var = max(second - mean**2, 0.0)
    return EnergyStats(mean=mean, stddev=math.sqrt(var))


def path_length(traj: Trajectory, op: SubspaceOperator) -> float:
    """Arc length of the trajectory: integral of ||H psi(t)|| dt (trapezoid)."""
    speeds = np.array([np.linalg.norm(op.matvec(s)) for s in traj.states])
    return float(np.trapezoid(speeds, traj.times))


def path_length_from_energy(stats: EnergyStats, duration: float) -> float:
    """Closed form T sqrt(dE^2 + <E>^2), valid for time-independent H."""
    return duration * math.hypot(stats.stddev, stats.mean)


def orthogonality_metrics(
    traj: Trajectory, eps: float = 0.1
) -> tuple[int, float | None]:
    """Greedy count of mutually distinguishable states along the trajectory.

    Walks the sampled states, re-anchoring whenever the overlap with the
    current anchor first drops to ``eps`` or below; the count starts at 1
    (the initial state).  Also returns the first time the overlap with
    the *initial* state drops to ``eps`` or below, or None if it never
    does.
    """
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    states = traj.states
    anchor = states[0]
    count = 1
    first_time = None
    for k in range(1, len(states)):
        if abs(np.vdot(anchor, states[k])) <= eps:
            count += 1
            anchor = states[k]
        if first_time is None and abs(np.vdot(states[0], states[k])) <= eps:
            first_time = float(traj.times[k])
    return count, first_time


@dataclass(frozen=True)
class SpeedLimitReport:
    """Measured clock traversal versus the two quantum speed limits."""

    mt_bound: float  # pi / (2 dE)
    ml_bound: float  # pi / <E>  (energy above the ground state)
    t_orth: float | None  # measured first-orthogonality time
    f_clock: float  # clock ticks advanced per unit time
    ratio_std: float  # f_clock / dE: speed per unit energy spread
    ratio_mean: float  # f_clock / <E>: speed per unit mean energy


def speed_limit_bounds(
    stats: EnergyStats,
    ticks: float,
    duration: float,
    t_orth: float | None = None,
) -> SpeedLimitReport:
    """Speed-limit bounds and speed-per-energy ratios for one run.

    ``ticks`` is how many clock sites the packet traverses in ``duration``.
    Both bounds use hbar = 1; a zero denominator yields an infinite bound.
    """
    mt = math.pi / (2 * stats.stddev) if stats.stddev > 0 else math.inf
    ml = math.pi / stats.mean if stats.mean > 0 else math.inf
    f_clock = ticks / duration
    return SpeedLimitReport(
        mt_bound=mt,
        ml_bound=ml,
        t_orth=t_orth,
        f_clock=f_clock,
        ratio_std=f_clock / stats.stddev if stats.stddev > 0 else math.inf,
        ratio_mean=f_clock / stats.mean if stats.mean > 0 else math.inf,
    )


def success_probability(traj: Trajectory, lo: int, hi: int) -> float:
    """Probability weight of the final state on chain sites lo..hi inclusive."""
    final = traj.states[-1]
    if not 0 <= lo <= hi < len(final):
        raise ValueError(f"window [{lo}, {hi}] outside chain of {len(final)} sites")
    return float(np.sum(np.abs(final[lo : hi + 1]) ** 2))


def chain_position_moments(state: np.ndarray) -> tuple[float, float]:
    """Mean and standard deviation of the chain-site probability density."""
    p = np.abs(np.asarray(state)) ** 2
    p = p / p.sum()
    x = np.arange(len(p))
    mean = float(x @ p)
    var = float((x - mean) ** 2 @ p)
    return mean, math.sqrt(var)


def fit_loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 2:
        raise ValueError("need at least two points to fit a slope")
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("log-log fit requires positive data")
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)
