"""Metrics: energy, path length, orthogonality counting, speed limits."""

import math

import numpy as np
import pytest

from clocksim.dynamics import evolve_subspace, overlap_series
from clocksim.hamiltonian import SubspaceOperator, subspace_operator
from clocksim.metrics import (
    EnergyStats,
    chain_position_moments,
    energy_stats,
    fit_loglog_slope,
    orthogonality_metrics,
    path_length,
    path_length_from_energy,
    speed_limit_bounds,
    success_probability,
)
from clocksim.packets import GaussianParams, cosine_profile, make_cosine_packet, make_gaussian


def cosine_energy_spread_oracle(g: int) -> float:
    """Independent continuum prediction for the cosine packet's dE.

    The linear-dispersion chain transports amplitude at two sites per
    unit time, so dE = 2 ||w'||_2 / g with the derivative norm evaluated
    by quadrature on the continuum profile.
    """
    u = np.linspace(0.0, 1.0, 200001)
    w = cosine_profile(u)
    dw = np.gradient(w, u)
    return 2.0 * math.sqrt(np.trapezoid(dw**2, u)) / g


def test_energy_stats_basics():
    g = 30
    op = subspace_operator("fk", g)
    uniform = np.full(g + 1, (g + 1) ** -0.5, dtype=complex)
    stats = energy_stats(op, uniform)
    assert abs(stats.mean) < 1e-12
    assert abs(stats.stddev) < 1e-7

    lin = subspace_operator("lin", 600)
    psi = make_cosine_packet(600)
    stats = energy_stats(lin, psi)
    assert abs(stats.mean) < 1e-10  # particle-hole symmetric packet


def test_cosine_energy_spread_matches_oracle():
    g = 1200
    stats = energy_stats(subspace_operator("lin", g), make_cosine_packet(g))
    oracle = cosine_energy_spread_oracle(g)
    assert abs(stats.stddev - oracle) / oracle < 5e-3
    # closed form of the quadrature: 4 sqrt(3) pi / g
    assert abs(oracle - 4 * math.sqrt(3) * math.pi / g) / oracle < 1e-4


def test_path_length_stationary_is_zero():
    g = 20
    op = subspace_operator("fk", g)
    uniform = np.full(g + 1, (g + 1) ** -0.5, dtype=complex)
    traj = evolve_subspace(op, uniform, 10.0, samples=11)
    assert path_length(traj, op) < 1e-8


def test_path_length_closed_form():
    """For time-independent H, the arc length is T sqrt(dE^2 + <E>^2)."""
    g = 240
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, GaussianParams(sigma=0.05, x0=0.2, p0=48.0))
    t_final = 3 * g**2 / (10 * 48.0)
    traj = evolve_subspace(op, psi0, t_final, samples=41)
    stats = energy_stats(op, psi0)
    arc = path_length(traj, op)
    closed = path_length_from_energy(stats, t_final)
    assert abs(arc - closed) / closed < 1e-6


def test_orthogonality_stationary():
    g = 20
    op = subspace_operator("fk", g)
    uniform = np.full(g + 1, (g + 1) ** -0.5, dtype=complex)
    traj = evolve_subspace(op, uniform, 100.0, samples=51)
    count, t_orth = orthogonality_metrics(traj, eps=0.1)
    assert count == 1
    assert t_orth is None


def test_orthogonality_counts_moving_packet():
    g = 500
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, GaussianParams())
    traj = evolve_subspace(op, psi0, 3 * g**2 / 2400.0, samples=201)
    count, t_orth = orthogonality_metrics(traj, eps=0.1)
    assert count in (3, 4)
    assert t_orth is not None
    # once the packet leaves, the overlap with the start stays small
    ov = overlap_series(traj, psi0)
    k = int(np.argmax(ov <= 0.1))
    assert np.all(ov[k:] <= 0.1 + 1e-9)


def test_orthogonality_scale_invariance():
    """Counting is invariant under H -> a H, t -> t / a."""
    g = 300
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, GaussianParams(sigma=0.05, x0=0.2, p0=120.0))
    t_final = 3 * g**2 / (10 * 120.0)
    base = orthogonality_metrics(evolve_subspace(op, psi0, t_final, 201), eps=0.1)
    for a in (0.5, 2.0):
        scaled = SubspaceOperator(op.family, op.g, a * op.diag, a * op.off)
        traj = evolve_subspace(scaled, psi0, t_final / a, 201)
        count, t_orth = orthogonality_metrics(traj, eps=0.1)
        assert count == base[0]
        assert t_orth == pytest.approx(base[1] / a, rel=1e-9)


def test_orthogonality_eps_validation():
    op = subspace_operator("fk", 4)
    traj = evolve_subspace(op, np.full(5, 5**-0.5, dtype=complex), 1.0, samples=3)
    with pytest.raises(ValueError):
        orthogonality_metrics(traj, eps=0.0)
    with pytest.raises(ValueError):
        orthogonality_metrics(traj, eps=1.0)


def test_speed_limit_examples():
    r = speed_limit_bounds(EnergyStats(mean=1.0, stddev=1.0), ticks=10, duration=5.0)
    assert abs(r.mt_bound - math.pi / 2) < 1e-12
    assert abs(r.ml_bound - math.pi) < 1e-12
    assert r.f_clock == 2.0
    assert r.ratio_std == 2.0
    z = speed_limit_bounds(EnergyStats(mean=0.0, stddev=0.0), ticks=1, duration=1.0)
    assert math.isinf(z.mt_bound) and math.isinf(z.ml_bound)


def test_measured_orthogonality_respects_bounds():
    """The time to reach (near-)orthogonality beats neither speed limit."""
    g = 500
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, GaussianParams())
    traj = evolve_subspace(op, psi0, 3 * g**2 / 2400.0, samples=201)
    stats = energy_stats(op, psi0)
    _, t_orth = orthogonality_metrics(traj, eps=0.01)
    r = speed_limit_bounds(stats, 1, traj.duration, t_orth)
    assert t_orth is not None
    assert t_orth >= r.mt_bound * (1 - 1e-9)
    assert t_orth >= r.ml_bound * (1 - 1e-9)


def test_success_probability_windows():
    op = subspace_operator("fk", 10)
    psi0 = np.zeros(11, dtype=complex)
    psi0[7] = 1.0
    traj = evolve_subspace(op, psi0, 0.0, samples=2)
    assert success_probability(traj, 6, 10) == pytest.approx(1.0)
    assert success_probability(traj, 0, 5) == pytest.approx(0.0)
    with pytest.raises(ValueError):
        success_probability(traj, 6, 11)


def test_success_monotone_in_truncation_radius():
    """Wider truncation windows keep more of the packet's tails."""
    G = 60
    g = 5 * G
    op = subspace_operator("fk", g)
    values = []
    for cutoff in (2.0, 3.0, 4.0):
        psi0 = make_gaussian(g, GaussianParams(cutoff=cutoff))
        traj = evolve_subspace(op, psi0, 3 * g**2 / 2400.0, samples=41)
        values.append(success_probability(traj, 3 * G, 5 * G))
    assert values[0] < values[1] < values[2]


def test_chain_position_moments():
    state = np.zeros(9)
    state[4] = 1.0
    mean, std = chain_position_moments(state)
    assert (mean, std) == (4.0, 0.0)
    state = np.array([1.0, 0, 0, 1.0]) / math.sqrt(2)
    mean, std = chain_position_moments(state)
    assert mean == pytest.approx(1.5)
    assert std == pytest.approx(1.5)


def test_fit_loglog_slope():
    xs = [10, 20, 40, 80]
    assert fit_loglog_slope(xs, [3 * x**2 for x in xs]) == pytest.approx(2.0)
    assert fit_loglog_slope(xs, [5.0 / x for x in xs]) == pytest.approx(-1.0)
    with pytest.raises(ValueError):
        fit_loglog_slope([10], [1.0])
    with pytest.raises(ValueError):
        fit_loglog_slope([1, 2], [0.0, 1.0])
